#include "testing.hpp"
#include "wof/orbitfn.hpp"

#include <cmath>

using namespace wof;
using wof::test::q;
using wof::test::qi;
using wof::test::rel_err;

namespace {

const Complex I(0, 1);

RVec rand_vec(std::mt19937_64& rng, int n, double lo, double hi) { return wof::test::random_point(rng, n, lo, hi); }

QVec rand_strict(std::mt19937_64& rng, int n, int hi = 4) { return wof::test::random_strict(rng, n, hi); }

// The rank-2 formulas written out by hand in omega coordinates.
Complex a2_explicit(double a, double b, double t1, double t2) {
  auto e = [](double u) { return std::polar(1.0, 2 * kPi * u / 3); };
  return e((2 * a + b) * t1 + (a + 2 * b) * t2) - e((-a + b) * t1 + (a + 2 * b) * t2) -
         e((2 * a + b) * t1 + (a - b) * t2) + e(-((a - b) * t1 + (2 * a + b) * t2)) +
         e(-((a + 2 * b) * t1 + (-a + b) * t2)) - e(-((a + 2 * b) * t1 + (2 * a + b) * t2));
}

Complex c2_explicit(double a, double b, double t1, double t2) {
  auto c = [](double u) { return 2 * std::cos(kPi * u); };
  return c((a + b) * t1 + (a + 2 * b) * t2) - c(b * t1 + (a + 2 * b) * t2) - c((a + b) * t1 + a * t2) +
         c(b * t1 - a * t2);
}

// Long-root norm 2 here, so the arguments carry 2*pi (the half metric would give pi).
Complex g2_explicit(double a, double b, double t1, double t2) {
  auto c = [](double u) { return 2 * std::cos(2 * kPi * u); };
  return c((2 * a + b) * t1 + (a + 2 * b / 3) * t2) - c((a + b) * t1 + (a + 2 * b / 3) * t2) -
         c((2 * a + b) * t1 + (a + b / 3) * t2) + c((a + b) * t1 + b / 3 * t2) + c(a * t1 + (a + b / 3) * t2) -
         c(a * t1 - b / 3 * t2);
}

// A random point of the closed fundamental domain on one of its faces.
RVec boundary_point(const RootSystem& rs, std::mt19937_64& rng) {
  const int n = rs.rank();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> face(0, n);
  // Barycentric point on the simplex with vertices 0 and omega_k / q_k.
  std::vector<double> w(n + 1);
  double tot = 0;
  for (auto& v : w) v = u(rng);
  w[face(rng)] = 0;
  for (auto v : w) tot += v;
  for (auto& v : w) v /= tot;
  RVec x(n, 0.0);
  for (int k = 0; k < n; ++k) x[k] = w[k + 1] / rs.comarks()[k];
  return x;
}

}  // namespace

TEST_CASE("orbit function examples") {
  const auto a1 = RootSystem::build("A1");
  for (int m = 1; m <= 4; ++m)
    for (double th : {0.1, 0.37, 0.5, 0.81}) {
      CHECK(rel_err(eval(a1, OrbitKind::antisymmetric, qi({m}), {th}), 2.0 * I * std::sin(kPi * m * th)) < 1e-12);
      CHECK(rel_err(eval(a1, OrbitKind::symmetric, qi({m}), {th}), 2 * std::cos(kPi * m * th)) < 1e-12);
    }
  const auto a2 = RootSystem::build("A2");
  CHECK(rel_err(eval(a2, OrbitKind::antisymmetric, qi({1, 1}), {0.25, 0.25}), -4.0 * I) < 1e-12);
  for (const char* d : {"A2", "A3", "B3", "C2", "C3", "D4", "G2"}) {
    const auto rs = RootSystem::build(d);
    CHECK(std::abs(eval(rs, OrbitKind::antisymmetric, rs.rho(), RVec(rs.rank(), 0.0))) < 1e-12);
  }
  CHECK(parse_orbit_kind("anti") == OrbitKind::antisymmetric);
  CHECK(parse_orbit_kind("sym-norm") == OrbitKind::normalized_symmetric);
  CHECK_THROWS_AS(parse_orbit_kind("foo"), DomainError);
  CHECK_THROWS_AS(eval(a2, OrbitKind::antisymmetric, qi({1, 0}), {0.1, 0.2}), DomainError);
  // Normalized symmetric = |W_lambda| * symmetric.
  const Complex s = eval(a2, OrbitKind::symmetric, qi({2, 0}), {0.13, 0.29});
  CHECK(rel_err(eval(a2, OrbitKind::normalized_symmetric, qi({2, 0}), {0.13, 0.29}), 2.0 * s) < 1e-12);
}

TEST_CASE("rank two explicit formulas") {
  std::mt19937_64 rng(11);
  const auto a2 = RootSystem::build("A2"), c2 = RootSystem::build("C2"), g2 = RootSystem::build("G2");
  for (int t = 0; t < 50; ++t) {
    const QVec l = rand_strict(rng, 2, 5);
    const RVec x = rand_vec(rng, 2, -1, 1);
    const double a = to_double(l[0]), b = to_double(l[1]);
    CHECK(rel_err(eval(a2, OrbitKind::antisymmetric, l, x), a2_explicit(a, b, x[0], x[1])) < 1e-10);
    CHECK(rel_err(eval(c2, OrbitKind::antisymmetric, l, x), c2_explicit(a, b, x[0], x[1])) < 1e-10);
    CHECK(rel_err(eval(g2, OrbitKind::antisymmetric, l, x), g2_explicit(a, b, x[0], x[1])) < 1e-10);
  }
  // phi_(a a) of A_2 is pure imaginary.
  for (int a = 1; a <= 4; ++a) {
    const RVec x = rand_vec(rng, 2, -1, 1);
    const Complex v = eval(a2, OrbitKind::antisymmetric, qi({a, a}), x);
    CHECK(std::abs(v.real()) < 1e-10);
    const Complex w = 2.0 * I *
                      (std::sin(2 * kPi * a * (x[0] + x[1])) - std::sin(2 * kPi * a * x[0]) -
                       std::sin(2 * kPi * a * x[1]));
    CHECK(rel_err(v, w) < 1e-10);
  }
}

TEST_CASE("closed forms match the sum definition") {
  std::mt19937_64 rng(12);
  for (const char* d : {"A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < 25; ++t) {
      const QVec l = rand_strict(rng, rs.rank(), 4);
      const RVec x = rand_vec(rng, rs.rank(), -1, 1);
      const RVec m = to_double(to_orthogonal(rs, l));
      const RVec xo = point_to_orthogonal(rs, x);
      CHECK(rel_err(eval_closed_form(rs, OrbitKind::antisymmetric, m, xo), eval(rs, OrbitKind::antisymmetric, l, x)) <
            1e-10);
      // Symmetric kinds, including wall labels.
      QVec lw = l;
      lw[t % rs.rank()] = 0;
      const RVec mw = to_double(to_orthogonal(rs, lw));
      for (auto k : {OrbitKind::symmetric, OrbitKind::normalized_symmetric})
        CHECK(rel_err(eval_closed_form(rs, k, mw, xo), eval(rs, k, lw, x)) < 1e-10);
    }
  }
  SUBCASE("D_n with m_n = 0 has no sine part") {
    const auto d4 = RootSystem::build("D4");
    // m = (3,2,1,0): lambda_3 = lambda_4.
    const QVec l = from_orthogonal(d4, qi({3, 2, 1, 0}));
    CHECK(l == qi({1, 1, 1, 1}));
    std::mt19937_64 r2(5);
    const RVec xo = rand_vec(r2, 4, -1, 1);
    std::vector<std::vector<double>> sn(4, std::vector<double>(4));
    const RVec m{3, 2, 1, 0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sn[i][j] = std::sin(2 * kPi * m[i] * xo[j]);
    CHECK(std::abs(det(sn)) < 1e-14);
    const Complex v = eval_closed_form(d4, OrbitKind::antisymmetric, m, xo);
    std::vector<std::vector<double>> cs(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) cs[i][j] = std::cos(2 * kPi * m[i] * xo[j]);
    CHECK(rel_err(v, 8.0 * det(cs)) < 1e-12);
  }
  SUBCASE("B_2 and C_2 agree at equal orthogonal data") {
    const auto b2 = RootSystem::build("B2"), c2 = RootSystem::build("C2");
    std::mt19937_64 r2(6);
    for (int t = 0; t < 20; ++t) {
      const QVec m = qi({3 + t % 3, 1 + t % 2});
      const RVec xo = rand_vec(r2, 2, -1, 1);
      const Complex vb = eval(b2, OrbitKind::antisymmetric, from_orthogonal(b2, m), point_from_orthogonal(b2, xo));
      const Complex vc = eval(c2, OrbitKind::antisymmetric, from_orthogonal(c2, m), point_from_orthogonal(c2, xo));
      CHECK(rel_err(vb, vc) < 1e-10);
    }
  }
  CHECK_THROWS_AS(eval_closed_form(RootSystem::build("G2"), OrbitKind::antisymmetric, {2, 1}, {0.1, 0.2}),
                  DomainError);
}

TEST_CASE("rho products") {
  std::mt19937_64 rng(13);
  for (const char* d : {"A1", "A2", "A3", "B3", "C2", "C3", "D4", "G2"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < 20; ++t) {
      const RVec x = rand_vec(rng, rs.rank(), -1, 1);
      const auto v = rho_products(rs, x);
      CHECK(rel_err(v.anti_product, v.anti_sum) < 1e-10);
      // The cosine product is phi_rho(2x) / phi_rho(x), the character of rho.
      RVec x2 = x;
      for (auto& c : x2) c *= 2;
      CHECK(rel_err(v.sym_product, rho_products(rs, x2).anti_sum / v.anti_sum) < 1e-8);
      if (rs.has_orthogonal_model()) {
        const auto o = rho_products_orth(rs, point_to_orthogonal(rs, x));
        CHECK(rel_err(o.anti, v.anti_product) < 1e-10);
        CHECK(rel_err(o.sym, v.sym_product) < 1e-10);
      }
    }
  }
  // Rank one: the cosine product is the orbit sum itself; for A_2 they differ by the constant 2.
  const auto a1 = RootSystem::build("A1"), a2 = RootSystem::build("A2");
  CHECK(rel_err(rho_products(a1, {0.3}).sym_product, rho_products(a1, {0.3}).sym_sum) < 1e-12);
  for (int t = 0; t < 5; ++t) {
    const auto v = rho_products(a2, rand_vec(rng, 2, -1, 1));
    CHECK(rel_err(v.sym_product - v.sym_sum, 2.0) < 1e-10);
  }
  // Zeros on walls and their translates, none inside F.
  for (const char* d : {"A2", "C2", "G2", "B3"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < 10; ++t) {
      RVec x = rand_vec(rng, rs.rank(), -2, 2);
      // <alpha_i, x> = x_i |alpha_i|^2 / 2; make it an integer.
      x[t % rs.rank()] = (t % 3) / (to_double(rs.root_norms()[t % rs.rank()]) / 2);
      CHECK(std::abs(rho_products(rs, x).anti_product) < 1e-10);
    }
    for (int t = 0; t < 10; ++t) {
      RVec x(rs.rank());
      std::uniform_real_distribution<double> u(0.05, 0.95);
      double tot = 0;
      std::vector<double> w(rs.rank() + 1);
      for (auto& v : w) tot += (v = u(rng));
      for (int k = 0; k < rs.rank(); ++k) x[k] = w[k + 1] / tot / rs.comarks()[k];
      REQUIRE(in_fundamental_domain(rs, x) == FDClass::interior);
      CHECK(std::abs(rho_products(rs, x).anti_product) > 1e-6);
    }
  }
}

TEST_CASE("fundamental domain in orthogonal coordinates") {
  std::mt19937_64 rng(14);
  for (const char* d : {"A2", "A3", "B2", "B3", "C2", "C3", "D4"}) {
    const auto rs = RootSystem::build(d);
    int inside = 0;
    for (int t = 0; t < 400; ++t) {
      const RVec x = rand_vec(rng, rs.rank(), -0.2, 1.0);
      const auto a = in_fundamental_domain(rs, x, 1e-12);
      const auto b = fundamental_domain_orth(rs, point_to_orthogonal(rs, x), 1e-12);
      CHECK(a == b);
      inside += a == FDClass::interior;
    }
    CHECK(inside > 0);
    // Vertices sit on the boundary.
    for (int k = 0; k < rs.rank(); ++k) {
      RVec v(rs.rank(), 0.0);
      v[k] = 1.0 / rs.comarks()[k];
      CHECK(fundamental_domain_orth(rs, point_to_orthogonal(rs, v), 1e-12) == FDClass::boundary);
    }
  }
}

TEST_CASE("characters and dimensions") {
  const auto a1 = RootSystem::build("A1"), a2 = RootSystem::build("A2"), c2 = RootSystem::build("C2"),
             g2 = RootSystem::build("G2");
  CHECK(dimension(a2, qi({0, 0})) == 1);
  CHECK(dimension(a2, qi({1, 0})) == 3);
  CHECK(dimension(a2, qi({1, 1})) == 8);
  CHECK(dimension(c2, qi({1, 0})) == 4);
  CHECK(dimension(c2, qi({0, 1})) == 5);
  CHECK(dimension(g2, qi({1, 0})) * dimension(g2, qi({0, 1})) == 98);
  CHECK(dimension(RootSystem::build("B3"), qi({0, 0, 1})) == 8);
  CHECK(dimension(RootSystem::build("D4"), qi({1, 0, 0, 0})) == 8);
  CHECK(dimension(RootSystem::build("A3"), qi({0, 1, 0})) == 6);
  CHECK_THROWS_AS(dimension(a2, q({Rational(1, 2), 0})), DomainError);

  for (int m = 0; m <= 4; ++m)
    for (double th : {0.11, 0.3, 0.77}) {
      const Complex chi = character(a1, qi({m}), {th});
      CHECK(rel_err(chi, std::sin(kPi * (m + 1) * th) / std::sin(kPi * th)) < 1e-10);
    }
  std::mt19937_64 rng(15);
  for (int t = 0; t < 5; ++t) CHECK(rel_err(character(a2, qi({0, 0}), rand_vec(rng, 2, 0.05, 0.3)), 1.0) < 1e-12);
  // |phi_rho| is about 5e-13 here, under the default threshold.
  CHECK_THROWS_AS(character(a2, qi({1, 0}), {1e-5, 1e-5}), NearSingularError);
  CHECK(std::abs(character(a2, qi({1, 0}), {1e-5, 1e-5}, 1e-60) - 3.0) < 1e-3);
  CHECK(std::abs(character(a2, qi({1, 1}), {1e-5, 1e-5}, 1e-60) - 8.0) < 1e-3);
  for (const auto* rs : {&a2, &c2, &g2})
    for (const auto& l : {qi({1, 0}), qi({0, 1}), qi({2, 1}), qi({1, 2}), qi({3, 0})}) {
      const double dim = dimension(*rs, l).convert_to<double>();
      CHECK(std::abs(character(*rs, l, {1e-5, 2e-5}, 1e-60) - dim) < 1e-3 * std::max(1.0, dim / 100));
    }
  CHECK_THROWS_AS(character(a2, qi({1, 0}), {0.0, 0.0}), NearSingularError);
  // Characters are integer combinations of symmetric orbit functions: chi_(1,0) = phi_(1,0) for A_2.
  const RVec x{0.17, 0.41};
  CHECK(rel_err(character(a2, qi({1, 0}), x), eval(a2, OrbitKind::symmetric, qi({1, 0}), x)) < 1e-10);
  // chi_(1,1) = phi_(1,1) + 2 phi_0.
  CHECK(rel_err(character(a2, qi({1, 1}), x), eval(a2, OrbitKind::symmetric, qi({1, 1}), x) + 2.0) < 1e-10);
}

TEST_CASE("symmetry properties") {
  std::mt19937_64 rng(16);
  for (const char* d : {"A2", "A3", "B3", "C2", "C3", "D4", "G2"}) {
    const auto rs = RootSystem::build(d);
    const auto& group = weyl_group(rs);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int t = 0; t < 50; ++t) {
      const QVec l = rand_strict(rng, rs.rank(), 4);
      const OrbitFunction f(rs, OrbitKind::antisymmetric, l);
      const RVec x = rand_vec(rng, rs.rank(), -1, 1);
      const Complex fx = f(x);
      const auto& w = group[pick(rng)];
      // Anti-invariance.
      CHECK(rel_err(f(act(w, x)), static_cast<double>(w.det) * fx) < 1e-10);
      // Affine anti-invariance.
      CHECK(rel_err(f(affine_r0(rs, x)), -fx) < 1e-10);
      // Vanishing on the boundary of F.
      CHECK(std::abs(f(boundary_point(rs, rng))) < 1e-9);
      // Scaling: phi_{c lambda}(x) = phi_lambda(c x).
      std::uniform_real_distribution<double> uc(0.2, 3.0);
      const double c = uc(rng);
      RVec cl = to_double(l), cx = x;
      for (auto& v : cl) v *= c;
      for (auto& v : cx) v *= c;
      CHECK(rel_err(eval(rs, OrbitKind::antisymmetric, cl, x), f(cx)) < 1e-10);
      // Duality.
      const RVec y = rand_vec(rng, rs.rank(), 0.05, 2.0);
      CHECK(rel_err(eval(rs, OrbitKind::antisymmetric, y, to_double(l)), f(y)) < 1e-10);
      // Symmetric functions are invariant.
      CHECK(rel_err(eval(rs, OrbitKind::symmetric, l, act(w, x)), eval(rs, OrbitKind::symmetric, l, x)) < 1e-10);
    }
  }
}

TEST_CASE("realness classes") {
  std::mt19937_64 rng(17);
  auto part = [&](const char* d, bool real) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < 20; ++t) {
      const Complex v = eval(rs, OrbitKind::antisymmetric, rand_strict(rng, rs.rank(), 4), rand_vec(rng, rs.rank(), -1, 1));
      CHECK(std::abs(real ? v.imag() : v.real()) < 1e-10);
    }
  };
  part("C2", true);
  part("C4", true);
  part("G2", true);
  part("D4", true);
  part("B3", false);
  part("C3", false);
  part("B5", false);
  part("C5", false);
  // A_n: conj phi_(l_1..l_n)(x) = det(w_0) phi_(l_n..l_1)(x), det(w_0) = (-1)^{n(n+1)/2}.
  for (int n = 1; n <= 4; ++n) {
    const auto rs = RootSystem(DiagramId{Family::A, n});
    const double sign = (n * (n + 1) / 2) % 2 ? -1.0 : 1.0;
    for (int t = 0; t < 10; ++t) {
      const QVec l = rand_strict(rng, n, 4);
      const QVec lr(l.rbegin(), l.rend());
      const RVec x = rand_vec(rng, n, -1, 1);
      CHECK(rel_err(std::conj(eval(rs, OrbitKind::antisymmetric, l, x)),
                    sign * eval(rs, OrbitKind::antisymmetric, lr, x)) < 1e-10);
    }
  }
}

TEST_CASE("A_n generating function identities") {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> rad(0.0, 0.3), ang(0.0, 2 * kPi);
  auto ys = [&](int n) {
    std::vector<Complex> y(n);
    for (auto& v : y) v = std::polar(rad(rng), ang(rng));
    return y;
  };
  for (int t = 0; t < 10; ++t) {
    AnIdentityParams p;
    p.y = ys(2);
    p.z = ys(2);
    p.cutoff = 12;
    CHECK(an_identity(AnIdentity::R1, p).residual < 1e-8);
    CHECK(an_identity(AnIdentity::cauchy, p).residual < 1e-8);
    p.z = ys(3);
    CHECK(an_identity(AnIdentity::R1, p).residual < 1e-8);
    for (int n : {2, 3}) {
      p.y = ys(n);
      p.t = std::polar(0.5, ang(rng));
      CHECK(an_identity(AnIdentity::cha3, p).residual < 1e-8);
      CHECK(an_identity(AnIdentity::cha4, p).residual < 1e-8);
    }
  }
  // Truncation matters: a short series misses the tail.
  AnIdentityParams p;
  p.y = {0.9, -0.5};
  p.z = {0.8, 0.3};
  p.cutoff = 2;
  CHECK(an_identity(AnIdentity::R1, p).residual > 1e-3);
  p.y = {1.2, 0.1};
  CHECK_THROWS_AS(an_identity(AnIdentity::R1, p), DomainError);

  for (int m = 0; m <= 4; ++m) {
    AnIdentityParams e;
    e.s = 2;
    e.r = 3;
    e.m = m;
    const auto r = an_identity(AnIdentity::cha5, e);
    CHECK(r.lhs_exact == r.rhs_exact);
    CHECK(r.residual == 0);
  }
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      AnIdentityParams e;
      e.n = n;
      e.m = m;
      const auto r6 = an_identity(AnIdentity::cha6, e);
      CHECK(r6.lhs_exact == r6.rhs_exact);
      if (n >= 2) {
        const auto r7 = an_identity(AnIdentity::cha7, e);
        CHECK(r7.lhs_exact == r7.rhs_exact);
      }
    }
  // cha5 with s=2, r=3, m=2: partitions (2,0), (1,1); the binomial factor is 7!/(5! 2!) = 21.
  AnIdentityParams e;
  e.m = 2;
  const auto r = an_identity(AnIdentity::cha5, e);
  CHECK(r.terms == 2);
  CHECK(r.rhs_exact == 21 * vandermonde({1, 0}) * vandermonde({2, 1, 0}));
  CHECK(partitions(4, 2).size() == 3);
  CHECK(partitions(3, 3).size() == 3);
}

TEST_CASE("alternants are A_n orbit functions on the unit circle") {
  std::mt19937_64 rng(19);
  const auto a3 = RootSystem::build("A3");
  for (int t = 0; t < 10; ++t) {
    const QVec l = rand_strict(rng, 3, 3);
    // Gauge with last coordinate 0: m_i = l_i + ... + l_n.
    std::vector<long long> e(4, 0);
    for (int i = 2; i >= 0; --i) e[i] = e[i + 1] + static_cast<long long>(l[i]);
    const RVec x = rand_vec(rng, 3, -1, 1);
    const RVec xo = point_to_orthogonal(a3, x);
    std::vector<Complex> y;
    for (double v : xo) y.push_back(std::polar(1.0, 2 * kPi * v));
    CHECK(rel_err(alternant(e, y), eval(a3, OrbitKind::antisymmetric, l, x)) < 1e-10);
  }
}
