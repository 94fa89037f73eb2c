#include "testing.hpp"
#include "wof/transforms.hpp"

#include <cmath>
#include <set>

using namespace wof;
using wof::test::q;
using wof::test::qi;

namespace {

std::set<QVec> coweights(const std::vector<GridPoint>& pts) {
  std::set<QVec> s;
  for (const auto& p : pts) s.insert(p.coweight);
  return s;
}

std::set<QVec> qset(std::initializer_list<QVec> l) { return {l.begin(), l.end()}; }

Rational r(long long a, long long b) { return Rational(a, b); }

std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Complex> v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

// Plain alternating sum over W, valid for any label.
Complex signed_sum(const RootSystem& rs, const RVec& lam, const RVec& x) {
  const RVec sx = metric_apply(rs, x);
  Complex v = 0;
  for (const auto& w : weyl_group(rs)) {
    const RVec wl = act(w, lam);
    double t = 0;
    for (std::size_t i = 0; i < wl.size(); ++i) t += wl[i] * sx[i];
    v += static_cast<double>(w.det) * std::polar(1.0, 2 * kPi * t);
  }
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("F_M grids") {
  const auto a2 = RootSystem::build("A2"), c2 = RootSystem::build("C2"), g2 = RootSystem::build("G2");
  CHECK(coweights(grid_FM(a2, 2).points) ==
        qset({qi({0, 0}), qi({1, 0}), qi({0, 1}), q({r(1, 2), 0}), q({0, r(1, 2)}), q({r(1, 2), r(1, 2)})}));
  CHECK(coweights(grid_FM(a2, 3).points) ==
        qset({qi({0, 0}), qi({1, 0}), qi({0, 1}), q({r(1, 3), 0}), q({0, r(1, 3)}), q({r(2, 3), 0}), q({0, r(2, 3)}),
              q({r(2, 3), r(1, 3)}), q({r(1, 3), r(2, 3)}), q({r(1, 3), r(1, 3)})}));
  CHECK(grid_FM(a2, 2).interior().empty());
  CHECK(coweights(grid_FM(a2, 3).interior()) == qset({q({r(1, 3), r(1, 3)})}));
  CHECK(coweights(grid_FM(a2, 5).interior()) == qset({q({r(1, 5), r(3, 5)}), q({r(2, 5), r(2, 5)}),
                                                      q({r(3, 5), r(1, 5)}), q({r(1, 5), r(2, 5)}),
                                                      q({r(2, 5), r(1, 5)}), q({r(1, 5), r(1, 5)})}));
  for (int M = 1; M <= 10; ++M) CHECK(grid_FM(a2, M).points.size() == static_cast<std::size_t>((M + 1) * (M + 2) / 2));

  CHECK(coweights(grid_FM(c2, 2).points) == qset({qi({0, 0}), qi({0, 1}), q({r(1, 2), 0}), q({0, r(1, 2)})}));
  CHECK(coweights(grid_FM(c2, 3).points) == qset({qi({0, 0}), qi({0, 1}), q({r(1, 3), 0}), q({0, r(1, 3)}),
                                                  q({0, r(2, 3)}), q({r(1, 3), r(1, 3)})}));
  CHECK(coweights(grid_FM(c2, 7).interior()) == qset({q({r(1, 7), r(4, 7)}), q({r(2, 7), r(2, 7)}),
                                                      q({r(1, 7), r(3, 7)}), q({r(2, 7), r(1, 7)}),
                                                      q({r(1, 7), r(2, 7)}), q({r(1, 7), r(1, 7)})}));

  CHECK(g2.marks() == std::vector<int>{2, 3});
  CHECK(coweights(grid_FM(g2, 2).points) == qset({qi({0, 0}), q({r(1, 2), 0})}));
  CHECK(coweights(grid_FM(g2, 3).points) == qset({qi({0, 0}), q({0, r(1, 3)}), q({r(1, 3), 0})}));
  CHECK(coweights(grid_FM(g2, 5).points) ==
        qset({qi({0, 0}), q({0, r(1, 5)}), q({r(1, 5), 0}), q({r(1, 5), r(1, 5)}), q({r(2, 5), 0})}));
  CHECK(coweights(grid_FM(g2, 14).interior()) ==
        qset({q({r(1, 7), r(3, 14)}), q({r(5, 14), r(1, 14)}), q({r(3, 14), r(1, 7)}), q({r(1, 14), r(3, 14)}),
              q({r(2, 7), r(1, 14)}), q({r(1, 7), r(1, 7)}), q({r(3, 14), r(1, 14)}), q({r(1, 14), r(1, 7)}),
              q({r(1, 7), r(1, 14)}), q({r(1, 14), r(1, 14)})}));
  // Every grid point is in the closed fundamental domain; interior exactly when all s_i > 0.
  for (const char* d : {"A2", "C2", "G2", "B3", "D4"}) {
    const auto rs = RootSystem::build(d);
    for (const auto& p : grid_FM(rs, 6).points) {
      const auto c = in_fundamental_domain(rs, p.omega);
      CHECK(c != FDClass::outside);
      CHECK((c == FDClass::interior) == p.interior);
    }
  }
  CHECK_THROWS_AS(grid_FM(a2, 0), DomainError);
}

TEST_CASE("T_m sets") {
  const auto a1 = RootSystem::build("A1"), a2 = RootSystem::build("A2"), c2 = RootSystem::build("C2");
  // F_2(A_1) = {0, 1/2, 1}: 0 and 1 are fixed mod Q^vee, 1/2 pairs with 3/2.
  CHECK(Tm_expand(a1, grid_FM(a1, 2)).size() == 4);
  CHECK(Tm_lattice(a1, 2) == std::vector<QVec>{qi({0}), qi({1})});
  GridFM zero;
  zero.points.push_back(grid_FM(a2, 3).points.front());
  REQUIRE(zero.points[0].coweight == qi({0, 0}));
  CHECK(Tm_expand(a2, zero) == std::vector<QVec>{qi({0, 0})});
  CHECK(Tm_lattice(a2, 3).size() == 9);
  // (1/M) P^vee / Q^vee: det(Cartan) * M^n points.
  CHECK(Tm_expand(a2, grid_FM(a2, 5)).size() == 75);
  CHECK(Tm_expand(a2, grid_FM(a2, 3)).size() == 27);
  CHECK(Tm_expand(c2, grid_FM(c2, 7)).size() == 98);
  CHECK(Tm_expand(RootSystem::build("G2"), grid_FM(RootSystem::build("G2"), 4)).size() == 16);
  // Reduction is idempotent and lands in [0,1) alpha-check coordinates.
  const QVec x = q({r(7, 3), r(-5, 4)});
  CHECK(reduce_mod_coroot(c2, reduce_mod_coroot(c2, x)) == reduce_mod_coroot(c2, x));
  CHECK(reduce_mod_coroot(a2, qi({2, -1})) == qi({0, 0}));  // alpha_1 itself
}

TEST_CASE("default labels") {
  const auto a2 = RootSystem::build("A2"), c2 = RootSystem::build("C2");
  CHECK(default_labels(a2, 5).size() == 6);
  CHECK(default_labels(c2, 7).size() == 6);
  CHECK(default_labels(a2, 5).front() == qi({1, 1}));
  for (const auto& l : default_labels(c2, 7)) CHECK(is_strictly_dominant(l));
}

TEST_CASE("finite orbit-function transform") {
  std::mt19937_64 rng(9);
  for (auto [d, M, c] : {std::tuple{"A2", 5, 450.0}, {"C2", 7, 784.0}, {"G2", 14, 2352.0}, {"A2", 8, 1152.0}}) {
    const auto rs = RootSystem::build(d);
    const auto plan = FinitePlan::build(rs, M);
    CAPTURE(d);
    CHECK(plan.constant() == c);
    CHECK(plan.max_offdiag() < 1e-9 * c);
    CHECK(plan.max_diag_error() < 1e-9 * c);
    CHECK(plan.labels().size() == plan.grid().size());
    const auto a = random_complex(rng, plan.labels().size());
    CHECK(max_diff(plan.forward(plan.inverse(a)), a) < 1e-10);
    const auto f = random_complex(rng, plan.grid().size());
    CHECK(max_diff(plan.inverse(plan.forward(f)), f) < 1e-10);
    // A sampled orbit function transforms to a unit vector.
    for (std::size_t l = 0; l < plan.labels().size(); ++l) {
      std::vector<Complex> s;
      for (const auto& g : plan.grid()) s.push_back(eval(rs, OrbitKind::antisymmetric, plan.labels()[l], to_double(g.omega)));
      const auto e = plan.forward(s);
      for (std::size_t k = 0; k < e.size(); ++k) CHECK(std::abs(e[k] - (k == l ? 1.0 : 0.0)) < 1e-10);
    }
    // The expansion continues off the grid.
    const RVec x = wof::test::random_point(rng, rs.rank());
    Complex direct = 0;
    for (std::size_t l = 0; l < a.size(); ++l) direct += a[l] * eval(rs, OrbitKind::antisymmetric, plan.labels()[l], x);
    CHECK(std::abs(plan.synthesize(a, x) - direct) < 1e-10);
  }
  const auto a2 = RootSystem::build("A2");
  // Labels differing by M Q are not separated.
  CHECK_THROWS_AS(FinitePlan::build(a2, 5, {qi({1, 1}), qi({6, 6})}), NonInvertiblePlanError);
  CHECK_THROWS_AS(FinitePlan::build(a2, 3, default_labels(a2, 5)), NonInvertiblePlanError);
  CHECK_THROWS_AS(FinitePlan::build(a2, 5, {qi({1, 0})}), DomainError);
  const auto plan = FinitePlan::build(a2, 5);
  CHECK_THROWS_AS(plan.forward({1.0}), DomainError);
}

TEST_CASE("grid periodicity in the label") {
  for (auto [d, M] : {std::pair{"A1", 6}, {"A2", 5}, {"C2", 7}, {"G2", 5}}) {
    const auto rs = RootSystem::build(d);
    const auto grid = grid_FM(rs, M);
    const QVec lam = QVec(rs.rank(), Rational(1));
    for (int j = 0; j < rs.rank(); ++j) {
      QVec shifted = lam;
      for (int k = 0; k < rs.rank(); ++k) shifted[k] += M * rs.cartan()[j][k];  // + M alpha_j
      for (const auto& p : grid.points) {
        const RVec x = to_double(p.omega);
        const Complex a = signed_sum(rs, to_double(lam), x);
        const Complex b = signed_sum(rs, to_double(shifted), x);
        CHECK(std::abs(a - b) < 1e-9);
      }
    }
  }
  // A_1: phi_{m+M} = (-1)^s phi_m at s/M, so the period in m is 2M.
  const auto a1 = RootSystem::build("A1");
  const int M = 6;
  for (const auto& p : grid_FM(a1, M).points) {
    const RVec x = to_double(p.omega);
    const Complex a = eval(a1, OrbitKind::antisymmetric, qi({2}), x);
    CHECK(std::abs(eval(a1, OrbitKind::antisymmetric, qi({2 + 2 * M}), x) - a) < 1e-9);
    CHECK(std::abs(eval(a1, OrbitKind::antisymmetric, qi({2 + M}), x) - (p.s[1] % 2 ? -a : a)) < 1e-9);
  }
}

TEST_CASE("1-D discrete transforms") {
  std::mt19937_64 rng(17);
  for (const char* k : {"sine", "cosine", "dct1", "dct2", "dct3", "dct4", "dst1", "dst2", "dst3", "dst4", "exp"}) {
    for (int N = 2; N <= 16; ++N) {
      const auto plan = DiscretePlan::build(k, 1, N);
      CAPTURE(k);
      CAPTURE(N);
      CHECK(plan.gram_residual() < 1e-12 * N);
      const auto a = random_complex(rng, plan.labels().size());
      CHECK(max_diff(plan.forward(plan.inverse(a)), a) < 1e-12);
      const auto f = random_complex(rng, plan.grid().size());
      CHECK(max_diff(plan.inverse(plan.forward(f)), f) < 1e-12);
    }
  }
  // Orthogonality constants as stated.
  const auto sine = DiscretePlan::build("sine", 1, 7);
  for (double e : sine.expected()) CHECK(e == 14.0);
  const auto cosine = DiscretePlan::build("cosine", 1, 5);
  CHECK(cosine.expected() == std::vector<double>{20, 10, 10, 10, 10, 20});
  // DCT-1, N = 2 by hand: rows cos(pi r k / 2), weights (1/2, 1, 1/2).
  const auto d1 = DiscretePlan::build("dct1", 1, 2);
  const double c[3] = {0.5, 1, 0.5};
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      double s = 0;
      for (int k = 0; k <= 2; ++k) s += c[k] * std::cos(kPi * a * k / 2) * std::cos(kPi * b * k / 2);
      const double want = a == b ? (a == 1 ? 1.0 : 2.0) : 0.0;
      CHECK(std::abs(s - want) < 1e-15);
      CHECK(std::abs(d1.gram()[2 - a][2 - b] - want) < 1e-15);  // labels are stored descending
    }
  // DCT-4 is its own inverse up to 2/N.
  for (int N : {3, 8, 13}) {
    const auto d4 = DiscretePlan::build("dct4", 1, N);
    for (std::size_t i = 0; i < d4.labels().size(); ++i)
      for (std::size_t j = 0; j < d4.labels().size(); ++j) {
        Complex s = 0;
        for (std::size_t k = 0; k < d4.grid().size(); ++k) s += d4.kernel(i, k) * d4.kernel(k, j);
        CHECK(std::abs(s - (i == j ? N / 2.0 : 0.0)) < 1e-12);
      }
  }
  CHECK_THROWS_AS(DiscretePlan::build("dct5", 1, 4), DomainError);
  CHECK_THROWS_AS(DiscretePlan::build("dct2", 2, 4), DomainError);
  CHECK_THROWS_AS(DiscretePlan::build("sine", 1, 4).forward({1.0, 2.0}), DomainError);
}

TEST_CASE("multivariate discrete transforms") {
  std::mt19937_64 rng(23);
  const char* kinds[] = {"anti_exp", "sym_exp", "anti_sine", "sym_cosine", "amdct1", "amdct2", "amdct3",
                         "amdct4",   "smdct1",  "smdct2",    "smdct3",     "smdct4"};
  for (const char* k : kinds)
    for (int n : {2, 3})
      for (int N = n + 1; N <= 8; ++N) {
        const auto plan = DiscretePlan::build(k, n, N);
        CAPTURE(k);
        CAPTURE(n);
        CAPTURE(N);
        CHECK(plan.gram_residual() < 1e-10);
        const auto a = random_complex(rng, plan.labels().size());
        CHECK(max_diff(plan.forward(plan.inverse(a)), a) < 1e-10);
        const auto f = random_complex(rng, plan.grid().size());
        CHECK(max_diff(plan.inverse(plan.forward(f)), f) < 1e-10);
      }
  // anti_sine, n = 2, M = 4: labels (3,2),(3,1),(2,1), Gram (2*4)^2 I.
  const auto as = DiscretePlan::build("anti_sine", 2, 4);
  CHECK(as.labels() == std::vector<std::vector<int>>{{3, 2}, {3, 1}, {2, 1}});
  for (double e : as.expected()) CHECK(e == 64.0);
  // sym_cosine with a repeated entry: M^n r_m |S_m| = 9 * 4 * 2.
  const auto sc = DiscretePlan::build("sym_cosine", 2, 3);
  for (std::size_t i = 0; i < sc.labels().size(); ++i)
    if (sc.labels()[i] == std::vector<int>{1, 1}) {
      CHECK(sc.expected()[i] == 72.0);
      CHECK(std::abs(sc.gram()[i][i] - 72.0) < 1e-10);
    }
  // AMDCT-4, n = 2, N = 4: orthogonal up to (N/2)^n.
  const auto a4 = DiscretePlan::build("amdct4", 2, 4);
  const auto g = a4.gram();
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(g[i][i] - 4.0) < 1e-12);
  // sym_exp diagonal carries |S_m|.
  const auto se = DiscretePlan::build("sym_exp", 3, 4);
  for (std::size_t i = 0; i < se.labels().size(); ++i) {
    const auto& m = se.labels()[i];
    const double s = m[0] == m[2] ? 6 : (m[0] == m[1] || m[1] == m[2]) ? 2 : 1;
    CHECK(se.expected()[i] == s);
  }
  // n = 1 degenerates to the 1-D transforms.
  for (auto [multi, one] : {std::pair{"anti_sine", "sine"}, {"amdct1", "dct1"}, {"sym_cosine", "cosine"}, {"smdct3", "dct3"}}) {
    const auto a = DiscretePlan::build(multi, 1, 6), b = DiscretePlan::build(one, 1, 6);
    REQUIRE(a.labels() == b.labels());
    REQUIRE(a.grid() == b.grid());
    for (std::size_t i = 0; i < a.labels().size(); ++i)
      for (std::size_t k = 0; k < a.grid().size(); ++k) CHECK(a.kernel(i, k) == b.kernel(i, k));
    CHECK(a.weights() == b.weights());
  }
  CHECK(DiscretePlan::build("anti_sine", 2, 4).point_label(0) == "3/4,1/2");
  CHECK(DiscretePlan::build("amdct2", 2, 4).point_label(0) == "3,2");
  CHECK(DiscreteKind::parse("AMDCT-2").name() == "amdct2");
  CHECK(DiscreteKind::parse("sym-cosine").name() == "sym_cosine");
  CHECK_THROWS_AS(DiscretePlan::build("anti_sine", 3, 3), DomainError);  // no labels
}

TEST_CASE("continuous transforms by quadrature") {
  const auto a2 = RootSystem::build("A2");
  CHECK(std::abs(fundamental_volume(a2) - 0.5) < 1e-15);
  CHECK(std::abs(fundamental_volume(RootSystem::build("C2")) - 0.5) < 1e-15);   // comarks (1,1)
  CHECK(std::abs(fundamental_volume(RootSystem::build("G2")) - 0.25) < 1e-15);  // comarks (2,1)
  const std::vector<QVec> labels = {qi({1, 1}), qi({2, 1}), qi({1, 2}), qi({2, 2}), qi({3, 1})};
  SUBCASE("series coefficients of an orbit function") {
    for (const auto& mu : {qi({1, 1}), qi({2, 1})}) {
      const OrbitFunction phi(a2, OrbitKind::antisymmetric, mu);
      const auto c = series_coefficients(a2, [&](const RVec& x) { return phi(x); }, labels);
      for (std::size_t i = 0; i < labels.size(); ++i) CHECK(std::abs(c[i] - (labels[i] == mu ? 1.0 : 0.0)) < 1e-4);
    }
  }
  SUBCASE("Plancherel on A2") {
    const OrbitFunction p1(a2, OrbitKind::antisymmetric, qi({1, 1})), p2(a2, OrbitKind::antisymmetric, qi({2, 1})),
        p3(a2, OrbitKind::antisymmetric, qi({3, 1}));
    const auto f = [&](const RVec& x) { return p1(x) + 0.5 * p2(x) - Complex(0, 0.25) * p3(x); };
    const auto rep = plancherel(a2, f, labels);
    CHECK(std::abs(rep.norm - 1.3125) < 1e-3);
    CHECK(rep.residual < 1e-3);
  }
  SUBCASE("A1 chamber transform is the sine transform") {
    const auto a1 = RootSystem::build("A1");
    QuadSpec qs;
    qs.points = 20000;
    qs.box = 1.0;
    const auto f = [](const RVec& x) { return Complex(std::sin(2 * kPi * x[0])); };
    for (double lam : {0.7, 1.3, 2.0, 3.5}) {
      const double a = 2 * kPi, b = kPi * lam;
      auto sinc = [](double u) { return std::abs(u) < 1e-12 ? 1.0 : std::sin(u) / u; };
      const double integral = 0.5 * (sinc(a - b) - sinc(a + b));
      CHECK(std::abs(chamber_transform(a1, f, {lam}, qs) - Complex(0, 2 * integral)) < 1e-6);
    }
  }
  SUBCASE("A1 chamber inverse") {
    const auto a1 = RootSystem::build("A1");
    QuadSpec qs;
    qs.points = 20000;
    qs.box = 8.0;
    const auto g = [](const RVec& l) {
      const double u = kPi * l[0];
      return Complex(0, 2 * std::sqrt(kPi) / 4 * u * std::exp(-u * u / 4));
    };
    for (double x : {0.2, 0.5, 1.1}) CHECK(std::abs(chamber_inverse(a1, g, {x}, qs) - x * std::exp(-x * x)) < 1e-6);
  }
  QuadSpec tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(series_coefficients(a2, [](const RVec&) { return Complex(1); }, labels, tiny), SizeLimitError);
}
