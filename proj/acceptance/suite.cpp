#include "suite.hpp"

#include "fixtures.hpp"
#include "wof/analysis.hpp"
#include "wof/orbitalg.hpp"
#include "wof/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace wof::suite {

namespace {

namespace fx = wof::fixtures;

using Clock = std::chrono::steady_clock;

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

RVec rand_point(std::mt19937_64& rng, int n, double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  RVec x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

QVec rand_strict(std::mt19937_64& rng, int n, int hi) {
  std::uniform_int_distribution<int> u(1, hi);
  QVec v;
  for (int i = 0; i < n; ++i) v.emplace_back(u(rng));
  return v;
}

std::vector<Complex> rand_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Complex> v(n);
  for (auto& z : v) z = {u(rng), u(rng)};
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

QVec take(const std::vector<long long>& abc, int n) {
  QVec v;
  for (int i = 0; i < n; ++i) v.emplace_back(abc[i]);
  return v;
}

// A random point on one face of the closed fundamental domain.
RVec boundary_point(const RootSystem& rs, std::mt19937_64& rng) {
  const int n = rs.rank();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> face(0, n);
  std::vector<double> w(n + 1);
  for (auto& v : w) v = u(rng);
  w[face(rng)] = 0;
  double tot = 0;
  for (auto v : w) tot += v;
  RVec x(n);
  for (int k = 0; k < n; ++k) x[k] = w[k + 1] / tot / rs.comarks()[k];
  return x;
}

Result start(int id, const char* title) {
  Result r;
  r.id = id;
  r.title = title;
  return r;
}

struct Ctx {
  const Options& opt;
  std::mt19937_64 rng;
  int scale(int full, int quick) const { return opt.quick ? quick : full; }
};

// ---- 1 ----
Result weyl_orders(Ctx&) {
  Result r = start(1, "Weyl group orders");
  const auto t0 = Clock::now();
  const std::vector<std::pair<const char*, std::size_t>> rows = {{"A1", 2},  {"A2", 6},  {"A3", 24}, {"A4", 120},
                                                                 {"B2", 8},  {"B3", 48}, {"C2", 8},  {"C3", 48},
                                                                 {"D4", 192}, {"G2", 12}};
  bool ok = true;
  std::string bad;
  for (const auto& [d, order] : rows) {
    const auto rs = RootSystem::build(d);
    const auto got = generate_group(rs).size();
    if (got != order || rs.weyl_order() != order) {
      ok = false;
      bad += std::string(" ") + d + "=" + std::to_string(got);
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.pass = ok && r.seconds < 5;
  r.detail = std::to_string(rows.size()) + " diagrams exact" + (ok ? "" : ", mismatch:" + bad) + ", " +
             fixed(r.seconds, 3) + " s (limit 5 s)";
  return r;
}

// ---- 2 ----
Result signed_orbits(Ctx&) {
  Result r = start(2, "signed-orbit fixtures");
  int checked = 0;
  std::string bad;
  for (const auto& abc : fx::signed_params()) {
    for (const auto& t : fx::signed_tables()) {
      const auto rs = RootSystem::build(t.diagram);
      ++checked;
      if (fx::computed_signed(rs, take(abc, rs.rank())) != t.expected(abc)) bad += " " + t.diagram;
    }
    const auto a1 = RootSystem::build("A1");
    fx::SignedSet prod;
    for (const auto& p : signed_orbit(a1, take(abc, 1)).points)
      for (const auto& q : signed_orbit(a1, QVec{Rational(abc[1])}).points)
        prod.insert({QVec{p.w[0], q.w[0]}, p.sign * q.sign});
    ++checked;
    if (prod != fx::signed_set(fx::a1xa1_entries(), abc)) bad += " A1xA1";
  }
  r.pass = bad.empty();
  r.detail = std::to_string(checked) + " tables x labels (A1, A1xA1, A2, C2, G2, A3, B3, C3) exact with signs" +
             (bad.empty() ? "" : "; mismatch:" + bad);
  return r;
}

// ---- 3 ----
Result closed_forms(Ctx& c) {
  Result r = start(3, "closed forms vs Weyl sums");
  const auto t0 = Clock::now();
  const int trials = c.scale(100, 20);
  double worst = 0;
  for (const char* d : {"A3", "B3", "C3", "D4"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < trials; ++t) {
      const QVec l = rand_strict(c.rng, rs.rank(), 5);
      const RVec x = rand_point(c.rng, rs.rank());
      const RVec xo = point_to_orthogonal(rs, x);
      worst = std::max(worst, rel_err(eval_closed_form(rs, OrbitKind::antisymmetric, to_double(to_orthogonal(rs, l)), xo),
                                      eval(rs, OrbitKind::antisymmetric, l, x)));
      // Symmetric kinds, including a wall label.
      QVec lw = l;
      lw[t % rs.rank()] = 0;
      const RVec mw = to_double(to_orthogonal(rs, lw));
      for (auto k : {OrbitKind::symmetric, OrbitKind::normalized_symmetric})
        worst = std::max(worst, rel_err(eval_closed_form(rs, k, mw, xo), eval(rs, k, lw, x)));
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.pass = worst < 1e-10 && r.seconds < 30;
  r.detail = std::to_string(trials) + " (lambda,x) per diagram on A3 B3 C3 D4, max rel err " + sci(worst) + ", " +
             fixed(r.seconds) + " s";
  return r;
}

// ---- 4 ----
Result symmetries(Ctx& c) {
  Result r = start(4, "anti-invariance, affine, boundary, scaling, duality");
  const int trials = c.scale(50, 10);
  double anti = 0, affine = 0, boundary = 0, scaling = 0, duality = 0;
  for (const char* d : {"A2", "A3", "B3", "C2", "C3", "D4", "G2"}) {
    const auto rs = RootSystem::build(d);
    const auto& group = weyl_group(rs);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uniform_real_distribution<double> uc(0.2, 3.0);
    for (int t = 0; t < trials; ++t) {
      const QVec l = rand_strict(c.rng, rs.rank(), 4);
      const OrbitFunction f(rs, OrbitKind::antisymmetric, l);
      const RVec x = rand_point(c.rng, rs.rank());
      const Complex fx = f(x);
      const auto& w = group[pick(c.rng)];
      anti = std::max(anti, rel_err(f(act(w, x)), static_cast<double>(w.det) * fx));
      affine = std::max(affine, rel_err(f(affine_r0(rs, x)), -fx));
      boundary = std::max(boundary, std::abs(f(boundary_point(rs, c.rng))));
      const double s = uc(c.rng);
      RVec sl = to_double(l), sx = x;
      for (auto& v : sl) v *= s;
      for (auto& v : sx) v *= s;
      scaling = std::max(scaling, rel_err(eval(rs, OrbitKind::antisymmetric, sl, x), f(sx)));
      const RVec y = rand_point(c.rng, rs.rank(), 0.05, 2.0);
      duality = std::max(duality, rel_err(eval(rs, OrbitKind::antisymmetric, y, to_double(l)), f(y)));
    }
  }
  r.pass = anti < 1e-10 && affine < 1e-10 && boundary < 1e-9 && scaling < 1e-10 && duality < 1e-10;
  r.detail = std::to_string(trials) + " per diagram on A2 A3 B3 C2 C3 D4 G2; anti " + sci(anti) + ", affine " +
             sci(affine) + ", boundary " + sci(boundary) + ", scaling " + sci(scaling) + ", duality " + sci(duality);
  return r;
}

// ---- 5 ----
Result rho_identities(Ctx& c) {
  Result r = start(5, "rho product identities");
  const int trials = c.scale(20, 5);
  double sine = 0, cosine = 0, orth_sine = 0, orth_cosine = 0, corrected = 0;
  for (const char* d : {"A3", "B3", "C3", "D4", "G2"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < trials; ++t) {
      const RVec x = rand_point(c.rng, rs.rank());
      const auto v = rho_products(rs, x);
      sine = std::max(sine, rel_err(v.anti_product, v.anti_sum));
      cosine = std::max(cosine, rel_err(v.sym_product, v.sym_sum));
      RVec x2 = x;
      for (auto& e : x2) e *= 2;
      corrected = std::max(corrected, rel_err(v.sym_product, rho_products(rs, x2).anti_sum / v.anti_sum));
      if (rs.has_orthogonal_model()) {
        const auto o = rho_products_orth(rs, point_to_orthogonal(rs, x));
        orth_sine = std::max(orth_sine, rel_err(o.anti, v.anti_sum));
        orth_cosine = std::max(orth_cosine, rel_err(o.sym, v.sym_sum));
      }
    }
  }
  r.pass = sine < 1e-10 && cosine < 1e-10 && orth_sine < 1e-10 && orth_cosine < 1e-10;
  r.detail = "A3 B3 C3 D4 G2; sine product vs sum " + sci(sine) + " (orthogonal " + sci(orth_sine) +
             "); cosine product vs orbit sum " + sci(cosine) + " (orthogonal " + sci(orth_cosine) +
             "): the cosine product is phi_rho(2x)/phi_rho(x), residual " + sci(corrected);
  return r;
}

// ---- 6 ----
Result finite_orthogonality(Ctx& c) {
  Result r = start(6, "finite transform orthogonality");
  bool ok = true;
  std::string parts;
  for (auto [d, M] : {std::pair{"A2", 5}, {"C2", 7}}) {
    const auto rs = RootSystem::build(d);
    const auto plan = FinitePlan::build(rs, M);
    const double literal = static_cast<double>(M) * M * static_cast<double>(rs.weyl_order());
    double diag = 0, diag_err = 0;
    for (std::size_t i = 0; i < plan.gram().size(); ++i) {
      diag = plan.gram()[i][i].real();
      diag_err = std::max(diag_err, std::abs(plan.gram()[i][i] - literal));
    }
    const auto a = rand_complex(c.rng, plan.labels().size());
    const auto f = rand_complex(c.rng, plan.grid().size());
    const double rt = std::max(max_diff(plan.forward(plan.inverse(a)), a), max_diff(plan.inverse(plan.forward(f)), f));
    const bool off_ok = plan.max_offdiag() < 1e-9 * literal;
    ok = ok && diag_err < 1e-9 * literal && off_ok && rt < 1e-10;
    if (!parts.empty()) parts += "; ";
    parts += std::string(d) + " m=" + std::to_string(M) + ": diagonal " + fixed(diag, 1) + " vs m^2|W| = " +
             fixed(literal, 0) + ", off-diagonal " + sci(plan.max_offdiag()) + ", round trip " + sci(rt);
  }
  r.pass = ok;
  r.detail = parts + " (grid expansion has det(Cartan) m^n points)";
  return r;
}

// ---- 7 ----
Result one_dim(Ctx& c) {
  Result r = start(7, "1-D discrete transforms");
  double res = 0, rt = 0;
  int plans = 0;
  for (const char* k : {"sine", "cosine", "dct1", "dct2", "dct3", "dct4"})
    for (int N = 2; N <= 16; ++N) {
      const auto plan = DiscretePlan::build(k, 1, N);
      ++plans;
      res = std::max(res, plan.gram_residual());
      const auto a = rand_complex(c.rng, plan.labels().size());
      const auto f = rand_complex(c.rng, plan.grid().size());
      rt = std::max({rt, max_diff(plan.forward(plan.inverse(a)), a), max_diff(plan.inverse(plan.forward(f)), f)});
    }
  r.pass = res < 1e-12 && rt < 1e-12;
  r.detail = std::to_string(plans) + " plans (sine, cosine, DCT-1..4, N = 2..16); Gram residual " + sci(res) +
             ", round trip " + sci(rt);
  return r;
}

// ---- 8 ----
Result multivariate(Ctx& c) {
  Result r = start(8, "multivariate discrete transforms");
  const int top = c.scale(8, 5);
  double res = 0, rt = 0;
  int plans = 0;
  for (const char* k : {"anti_exp", "sym_exp", "anti_sine", "sym_cosine", "amdct1", "amdct2", "amdct3", "amdct4",
                        "smdct1", "smdct2", "smdct3", "smdct4"})
    for (int n : {2, 3})
      for (int N = n + 1; N <= top; ++N) {
        const auto plan = DiscretePlan::build(k, n, N);
        ++plans;
        res = std::max(res, plan.gram_residual());
        const auto a = rand_complex(c.rng, plan.labels().size());
        const auto f = rand_complex(c.rng, plan.grid().size());
        rt = std::max({rt, max_diff(plan.forward(plan.inverse(a)), a), max_diff(plan.inverse(plan.forward(f)), f)});
      }
  r.pass = res < 1e-10 && rt < 1e-10;
  r.detail = std::to_string(plans) + " plans (12 kinds, n = 2, 3, N <= " + std::to_string(top) + "); Gram residual " +
             sci(res) + ", round trip " + sci(rt);
  return r;
}

// ---- 9 ----
Result products(Ctx& c) {
  Result r = start(9, "orbit product tables");
  const int points = c.scale(50, 5);
  int instances = 0, bad_comb = 0;
  double worst = 0;
  std::string empty;
  for (auto [d, rows] : {std::pair{"A2", &fx::a2_product_rows()}, {"C2", &fx::c2_product_rows()}}) {
    const auto rs = RootSystem::build(d);
    for (const auto& row : *rows) {
      int hits = 0;
      for (long long a = 1; a <= 7; ++a)
        for (long long b = 1; b <= 7; ++b)
          for (long long cc = 1; cc <= 9; ++cc) {
            if (!row.when(a, b, cc)) continue;
            ++hits;
            if (c.opt.quick && hits > 3) continue;
            ++instances;
            const QVec lam = fx::qi({cc, 0}), mu = fx::qi({a, b});
            const auto want = fx::merge(row.terms(a, b, cc));
            const auto fast = product_plain_signed(rs, lam, mu);
            if (fx::as_map(fast) != want || fx::as_map(product_plain_signed_bruteforce(rs, lam, mu)) != want) ++bad_comb;
            const OrbitFunction f(rs, OrbitKind::symmetric, lam), g(rs, OrbitKind::antisymmetric, mu);
            for (int k = 0; k < points; ++k) {
              const RVec x = rand_point(c.rng, 2);
              worst = std::max(worst, rel_err(evaluate(rs, fast, x), f(x) * g(x)));
            }
          }
      if (hits == 0) empty += std::string(" ") + d + ":" + row.name;
    }
  }
  r.pass = bad_comb == 0 && worst < 1e-9 && empty.empty();
  r.detail = std::to_string(fx::a2_product_rows().size() + fx::c2_product_rows().size()) + " rows, " +
             std::to_string(instances) + " instances; combinatorial mismatches " + std::to_string(bad_comb) +
             ", pointwise " + sci(worst) + " at " + std::to_string(points) + " x each" +
             (empty.empty() ? "" : "; rows without instances:" + empty) + "; corrected rows: " + fx::corrected_rows();
  return r;
}

// ---- 10 ----
Result branching(Ctx& c) {
  Result r = start(10, "branching restrictions");
  const int labels = c.scale(10, 3);
  double match = 0, vanish = 0;
  bool nonempty = true, empty = true;
  for (auto [d, rule] : {std::pair{"A2", "drop"}, {"A3", "drop"}, {"A3", "split:2"}}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < labels; ++t) {
      const QVec m = to_orthogonal(rs, rand_strict(c.rng, rs.rank(), 3));
      const auto b = branch(rs, BranchRule::parse(rule), m);
      nonempty = nonempty && !b.terms.empty();
      for (int k = 0; k < 20; ++k) {
        const RVec xt = rand_point(c.rng, static_cast<int>(b.kept.size()));
        match = std::max(match, rel_err(evaluate(b, xt), anti_block(rs.family(), to_double(m), branch_embed(rs, b, xt))));
      }
    }
  }
  for (const char* d : {"C3", "B3"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < labels; ++t) {
      const QVec m = to_orthogonal(rs, rand_strict(c.rng, rs.rank(), 3));
      const auto b = branch(rs, BranchRule::parse("drop"), m);
      empty = empty && b.terms.empty();
      for (int k = 0; k < 20; ++k) {
        const RVec xt = rand_point(c.rng, static_cast<int>(b.kept.size()));
        vanish = std::max(vanish, std::abs(anti_block(rs.family(), to_double(m), branch_embed(rs, b, xt))));
      }
    }
  }
  r.pass = match < 1e-9 && vanish < 1e-10 && nonempty && empty;
  r.detail = "A2->A1, A3->A2, A3->A1xA1 vs restriction " + sci(match) + "; C3->C2, B3->B2 restricted phi " +
             sci(vanish) + (empty ? ", no surviving terms" : ", SURVIVING TERMS");
  return r;
}

// ---- 11 ----
Result characters(Ctx&) {
  Result r = start(11, "characters at small x");
  const double eps = 1e-5;
  double worst = 0;
  int count = 0;
  std::string fixed_dims;
  for (const char* d : {"A2", "C2", "G2"}) {
    const auto rs = RootSystem::build(d);
    for (const auto& l : {fx::qi({0, 0}), fx::qi({1, 0}), fx::qi({0, 1}), fx::qi({1, 1}), fx::qi({2, 0}),
                          fx::qi({0, 2}), fx::qi({2, 1}), fx::qi({1, 2}), fx::qi({3, 0}), fx::qi({2, 2})}) {
      const double dim = dimension(rs, l).convert_to<double>();
      const Complex chi = character(rs, l, {eps, eps}, 1e-60);
      worst = std::max(worst, std::abs(chi - dim));
      ++count;
      if (std::string(d) == "A2" && (l == fx::qi({1, 0}) || l == fx::qi({1, 1})))
        fixed_dims += (fixed_dims.empty() ? "" : ", ") + fixed(dim, 0);
    }
  }
  r.pass = worst < 1e-3;
  r.detail = std::to_string(count) + " labels on A2 C2 G2 at x = (1e-5, 1e-5); max |chi - dim| " + sci(worst) +
             "; A2 (1,0), (1,1) dims " + fixed_dims;
  return r;
}

// ---- 12 ----
Result an_identities(Ctx& c) {
  Result r = start(12, "A_n generating identities");
  bool exact = true;
  for (int m = 0; m <= 4; ++m) {
    AnIdentityParams p;
    p.s = 2;
    p.r = 3;
    p.m = m;
    const auto res = an_identity(AnIdentity::cha5, p);
    exact = exact && res.lhs_exact == res.rhs_exact;
  }
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      AnIdentityParams p;
      p.n = n;
      p.m = m;
      const auto r6 = an_identity(AnIdentity::cha6, p);
      exact = exact && r6.lhs_exact == r6.rhs_exact;
      if (n >= 2) {
        const auto r7 = an_identity(AnIdentity::cha7, p);
        exact = exact && r7.lhs_exact == r7.rhs_exact;
      }
    }
  std::uniform_real_distribution<double> rad(0.0, 0.3), ang(0.0, 2 * kPi);
  auto ys = [&] {
    std::vector<Complex> y(2);
    for (auto& v : y) v = std::polar(rad(c.rng), ang(c.rng));
    return y;
  };
  double r1 = 0, cauchy = 0;
  for (int t = 0; t < c.scale(20, 5); ++t) {
    AnIdentityParams p;
    p.y = ys();
    p.z = ys();
    p.cutoff = 12;
    r1 = std::max(r1, an_identity(AnIdentity::R1, p).residual);
    cauchy = std::max(cauchy, an_identity(AnIdentity::cauchy, p).residual);
  }
  r.pass = exact && r1 < 1e-8 && cauchy < 1e-8;
  r.detail = std::string("cha-5, cha-6, cha-7 ") + (exact ? "exact" : "MISMATCH") + "; R-1 " + sci(r1) +
             ", Cauchy " + sci(cauchy) + " (n = 2, K = 12)";
  return r;
}

// ---- 13 ----
Result differential(Ctx& c) {
  Result r = start(13, "Laplace, sigma_2 and shift eigenrelations");
  const int trials = c.scale(20, 4);
  double lap = 0, sig = 0, shift = 0, stated_hat = 0, stated_sym = 0;
  for (const char* d : {"A2", "A3", "B3", "C2", "C3", "D4"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < trials; ++t) {
      const QVec l = rand_strict(c.rng, rs.rank(), 3);
      lap = std::max(lap, laplace_check(rs, l, sample_interior(rs, c.rng, l)).rel_err);
    }
  }
  for (const char* d : {"C2", "B3"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < c.scale(10, 2); ++t) {
      const QVec l = rand_strict(c.rng, rs.rank(), 2);
      sig = std::max(sig, sigma_k_check(rs, l, sample_interior(rs, c.rng, l), 2).rel_err);
    }
  }
  for (const char* d : {"A2", "C2", "G2", "A3", "B3"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < c.scale(10, 3); ++t) {
      const QVec l = rand_strict(c.rng, rs.rank(), 4);
      const RVec x = rand_point(c.rng, rs.rank()), y = rand_point(c.rng, rs.rank());
      const auto a = shift_operator_check(rs, l, x, y, ShiftVariant::D);
      const auto b = shift_operator_check(rs, l, x, y, ShiftVariant::D_hat);
      const auto s = shift_operator_check(rs, l, x, y, ShiftVariant::D_on_sym);
      shift = std::max({shift, a.rel_err_stated, b.rel_err, s.rel_err});
      stated_hat = std::max(stated_hat, b.rel_err_stated);
      stated_sym = std::max(stated_sym, s.rel_err_stated);
    }
  }
  r.pass = lap < 1e-5 && sig < 1e-3 && shift < 1e-10;
  r.detail = "Laplace " + sci(lap) + " (A2 A3 B3 C2 C3 D4), sigma_2 " + sci(sig) + " (C2 B3), shift " + sci(shift) +
             " (D as printed; D_hat, D on phi with symmetric/antisymmetric factors exchanged; printed forms " +
             sci(stated_hat) + ", " + sci(stated_sym) + ")";
  return r;
}

// ---- 14 ----
Result hermite_eigen(Ctx& c) {
  Result r = start(14, "Hermite eigenfunctions");
  const auto t0 = Clock::now();
  std::vector<MultiIndex> anti = {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}};
  std::vector<MultiIndex> sym = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {4, 0}};
  if (c.opt.quick) {
    anti = {{1, 0}, {3, 1}};
    sym = {{1, 1}, {4, 0}};
  }
  double eig = 0;
  bool eigenvalues = true;
  for (auto [list, v] : {std::pair{&anti, SymVariant::anti}, {&sym, SymVariant::sym}})
    for (const auto& m : *list) {
      const auto e = transform_eigen_check(m, v);
      eig = std::max(eig, e.rel_err);
      eigenvalues = eigenvalues && std::abs(e.eigenvalue - std::pow(Complex(0, 1), m[0] + m[1])) < 1e-15;
    }
  // Fourth power on functions that are not eigenfunctions.
  const auto g = [](double u, double v) { return u * std::exp(-kPi * (u * u + 1.5 * v * v)) * Complex(1, 0.3 * v); };
  double fourth = 0;
  for (auto v : {SymVariant::anti, SymVariant::sym}) {
    const HermiteGridTransform t(v);
    const double s = v == SymVariant::anti ? -1 : 1;
    fourth = std::max(fourth, fourth_power_residual(t, t.sample([&](double a, double b) { return g(a, b) + s * g(b, a); })));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.pass = eig < 1e-5 && fourth < 1e-4 && eigenvalues && r.seconds < 300;
  r.detail = std::to_string(anti.size() + sym.size()) + " multi-indices |m| <= 4, eigen residual " + sci(eig) +
             " (eigenvalue i^|m|), fourth power " + sci(fourth) + ", " + fixed(r.seconds, 1) + " s";
  return r;
}

}  // namespace

Result run(int id, const Options& opt) {
  using Fn = Result (*)(Ctx&);
  static const Fn table[kCriteria] = {weyl_orders, signed_orbits, closed_forms, symmetries,   rho_identities,
                                      finite_orthogonality, one_dim, multivariate, products,   branching,
                                      characters,  an_identities, differential, hermite_eigen};
  if (id < 1 || id > kCriteria) throw DomainError("no criterion " + std::to_string(id));
  Ctx ctx{opt, std::mt19937_64(opt.seed + static_cast<std::uint64_t>(id))};
  const auto t0 = Clock::now();
  Result r;
  try {
    r = table[id - 1](ctx);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  if (r.seconds == 0) r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<Result> run_all(const Options& opt, const std::function<void(const Result&)>& on_result) {
  std::vector<Result> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

bool known_failure(int id) { return id == 5 || id == 6; }

std::string format_line(const Result& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.title << ": " << r.detail;
  return s.str();
}

}  // namespace wof::suite
