#include "fixtures.hpp"
#include "testing.hpp"
#include "wof/orbitalg.hpp"

#include <functional>
#include <map>

using namespace wof;
using wof::test::qi;
using wof::test::rel_err;

namespace {

namespace fx = wof::fixtures;

void check_rows(const char* diagram, const std::vector<fx::ProductRow>& rows) {
  const auto rs = RootSystem::build(diagram);
  std::mt19937_64 rng(7);
  for (const auto& row : rows) {
    int hits = 0;
    for (long long a = 1; a <= 7; ++a)
      for (long long b = 1; b <= 7; ++b)
        for (long long c = 1; c <= 9; ++c) {
          if (!row.when(a, b, c)) continue;
          ++hits;
          const auto got = product_plain_signed(rs, qi({c, 0}), qi({a, b}));
          CAPTURE(row.name);
          CAPTURE(to_string(got));
          CHECK(fx::as_map(got) == fx::merge(row.terms(a, b, c)));
          CHECK(fx::as_map(product_plain_signed_bruteforce(rs, qi({c, 0}), qi({a, b}))) == fx::merge(row.terms(a, b, c)));
          if (hits % 5 == 1) {
            for (int k = 0; k < 10; ++k) {
              const RVec x = wof::test::random_point(rng, 2);
              const Complex lhs = eval(rs, OrbitKind::symmetric, qi({c, 0}), x) *
                                  eval(rs, OrbitKind::antisymmetric, qi({a, b}), x);
              CHECK(rel_err(evaluate(rs, got, x), lhs) < 1e-9);
            }
          }
        }
    CAPTURE(row.name);
    CHECK(hits > 0);
  }
}

}  // namespace

TEST_CASE("A2 product table") { check_rows("A2", fx::a2_product_rows()); }

TEST_CASE("C2 product table") { check_rows("C2", fx::c2_product_rows()); }

TEST_CASE("shortcut agrees with brute force") {
  std::mt19937_64 rng(11);
  for (const char* d : {"A2", "B2", "C2", "G2", "A3", "B3", "C3"}) {
    const auto rs = RootSystem::build(d);
    for (int trial = 0; trial < 6; ++trial) {
      const QVec mu = wof::test::random_strict(rng, rs.rank(), 3);
      QVec lambda = wof::test::random_strict(rng, rs.rank(), 3);
      lambda[trial % rs.rank()] = 0;
      CAPTURE(d);
      CHECK(product_plain_signed(rs, lambda, mu) == product_plain_signed_bruteforce(rs, lambda, mu));
    }
  }
}

TEST_CASE("A1 products") {
  const auto rs = RootSystem::build("A1");
  for (long long a = 1; a <= 6; ++a) {
    const auto s = product_signed_signed(rs, qi({a}), qi({a}));
    CHECK(s.terms.size() == 2);
    CHECK(s.coeff(qi({2 * a})) == 1);
    CHECK(s.coeff(qi({0})) == -2);
    for (long long b = 1; b <= 6; ++b) {
      if (b == a) continue;
      const auto t = product_signed_signed(rs, qi({a}), qi({b}));
      CHECK(t.coeff(qi({a + b})) == 1);
      CHECK(t.coeff(qi({std::abs(a - b)})) == -1);
      // O(a) O^±(b): a > b flips the lower term.
      const auto u = product_plain_signed(rs, qi({a}), qi({b}));
      CHECK(u.coeff(qi({a + b})) == 1);
      CHECK(u.coeff(qi({std::abs(a - b)})) == (b > a ? 1 : -1));
    }
  }
  CHECK(to_string(product_signed_signed(rs, qi({2}), qi({2}))) == "-2 O(0) + O(4)");
}

TEST_CASE("function products expand correctly") {
  std::mt19937_64 rng(5);
  const OrbitKind kinds[] = {OrbitKind::symmetric, OrbitKind::normalized_symmetric, OrbitKind::antisymmetric};
  for (const char* d : {"A2", "C2", "G2", "B3"}) {
    const auto rs = RootSystem::build(d);
    for (auto ka : kinds)
      for (auto kb : kinds) {
        QVec l = wof::test::random_strict(rng, rs.rank(), 2), m = wof::test::random_strict(rng, rs.rank(), 2);
        if (ka != OrbitKind::antisymmetric) l[0] = 0;
        const auto s = expand_function_product(rs, ka, l, kb, m);
        for (int k = 0; k < 5; ++k) {
          const RVec x = wof::test::random_point(rng, rs.rank());
          CAPTURE(d);
          CHECK(rel_err(evaluate(rs, s, x), eval(rs, ka, l, x) * eval(rs, kb, m, x)) < 1e-9);
        }
      }
  }
  const auto a2 = RootSystem::build("A2");
  CHECK_THROWS_AS(product_plain_signed(a2, qi({1, 0}), qi({1, 0})), DomainError);
  CHECK_THROWS_AS(product_plain_plain(a2, qi({-1, 0}), qi({1, 0})), DomainError);
  CHECK_THROWS_AS(product_plain_plain(a2, qi({1}), qi({1, 0})), DomainError);
}

TEST_CASE("plain products") {
  const auto rs = RootSystem::build("A2");
  const auto s = product_plain_plain(rs, qi({1, 0}), qi({0, 1}));
  CHECK(s.coeff(qi({1, 1})) == 1);
  CHECK(s.coeff(qi({0, 0})) == 3);
  CHECK(s.terms.size() == 2);
  const auto j = to_json(s);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["type"] == "plain");
}

// ---- branching ----

namespace {

void check_branch_value(const RootSystem& rs, const BranchResult& r, const QVec& m, std::mt19937_64& rng) {
  for (int k = 0; k < 20; ++k) {
    const RVec xt = wof::test::random_point(rng, static_cast<int>(r.kept.size()));
    const RVec xs = branch_embed(rs, r, xt);
    CHECK(rel_err(evaluate(r, xt), anti_block(rs.family(), to_double(m), xs)) < 1e-9);
  }
}

std::uint64_t block_sum(const BranchResult& r) {
  std::uint64_t wp = 1;
  for (const auto& b : r.target) {
    std::uint64_t f = factorial(b.dim);
    if (b.family == Family::B || b.family == Family::C) f <<= b.dim;
    if (b.family == Family::D) f <<= (b.dim - 1);
    wp *= f;
  }
  std::uint64_t s = 0;
  for (const auto& t : r.terms) s += static_cast<std::uint64_t>(std::llabs(t.coeff)) * wp;
  return s;
}

}  // namespace

TEST_CASE("anti_block matches the orbit function") {
  std::mt19937_64 rng(3);
  for (const char* d : {"A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5"}) {
    const auto rs = RootSystem::build(d);
    for (int t = 0; t < 4; ++t) {
      const QVec lam = wof::test::random_strict(rng, rs.rank(), 3);
      const RVec x = wof::test::random_point(rng, rs.rank());
      CAPTURE(d);
      CHECK(rel_err(anti_block(rs.family(), to_double(to_orthogonal(rs, lam)), point_to_orthogonal(rs, x)),
                    eval(rs, OrbitKind::antisymmetric, lam, x)) < 1e-9);
    }
  }
}

TEST_CASE("branching A2 to A1") {
  const auto rs = RootSystem::build("A2");
  const QVec m = qi({2, 1, 0});
  const auto r = branch(rs, BranchRule::parse("drop"), m);
  REQUIRE(r.terms.size() == 3);
  CHECK(r.terms[0] == BranchTerm{1, {qi({1, 0})}});
  CHECK(r.terms[1] == BranchTerm{-1, {qi({2, 0})}});
  CHECK(r.terms[2] == BranchTerm{1, {qi({2, 1})}});
  CHECK(r.cancelled == 0);
  CHECK(block_sum(r) == 6);
  std::mt19937_64 rng(1);
  check_branch_value(rs, r, m, rng);
}

TEST_CASE("branching A3 to A1 x A1") {
  const auto rs = RootSystem::build("A3");
  const QVec m = qi({3, 2, 1, 0});
  const auto r = branch(rs, BranchRule::parse("split:2"), m);
  REQUIRE(r.terms.size() == 6);
  std::map<std::pair<QVec, QVec>, long long> got;
  for (const auto& t : r.terms) got[{t.blocks[0], t.blocks[1]}] = t.coeff;
  CHECK(got[{qi({3, 2}), qi({1, 0})}] == 1);
  CHECK(got[{qi({3, 1}), qi({2, 0})}] == -1);
  CHECK(got[{qi({3, 0}), qi({2, 1})}] == 1);
  CHECK(got[{qi({2, 1}), qi({3, 0})}] == 1);
  CHECK(got[{qi({2, 0}), qi({3, 1})}] == -1);
  CHECK(got[{qi({1, 0}), qi({3, 2})}] == 1);
  CHECK(block_sum(r) + r.cancelled == 24);
  std::mt19937_64 rng(2);
  check_branch_value(rs, r, m, rng);
}

TEST_CASE("branching B, C and D") {
  std::mt19937_64 rng(4);
  SUBCASE("B and C drop vanish") {
    for (const char* d : {"B3", "C3", "B4"}) {
      const auto rs = RootSystem::build(d);
      const QVec m = to_orthogonal(rs, wof::test::random_strict(rng, rs.rank(), 3));
      const auto r = branch(rs, BranchRule::parse("drop"), m);
      CHECK(r.terms.empty());
      CHECK(r.cancelled == r.source_points);
      check_branch_value(rs, r, m, rng);
    }
  }
  SUBCASE("D drop keeps both signs of the last coordinate") {
    const auto rs = RootSystem::build("D4");
    const QVec m = qi({4, 3, 2, 1});
    const auto r = branch(rs, BranchRule::parse("drop"), m);
    CHECK(r.target[0].family == Family::D);
    CHECK(r.terms.size() == 8);
    for (const auto& t : r.terms) CHECK(std::llabs(t.coeff) == 1);
    CHECK(block_sum(r) + r.cancelled == r.source_points);
    check_branch_value(rs, r, m, rng);
    const auto r5 = branch(RootSystem::build("D5"), BranchRule::parse("drop"), qi({5, 4, 3, 2, 1}));
    CHECK(r5.terms.size() == 10);
    check_branch_value(RootSystem::build("D5"), r5, qi({5, 4, 3, 2, 1}), rng);
  }
  SUBCASE("splits") {
    for (auto [d, p] : {std::pair{"C3", 1}, {"C3", 2}, {"B3", 1}, {"C4", 2}, {"D5", 1}, {"D4", 2}, {"A4", 2}}) {
      const auto rs = RootSystem::build(d);
      const QVec m = to_orthogonal(rs, wof::test::random_strict(rng, rs.rank(), 3));
      const auto r = branch(rs, BranchRule::parse("split:" + std::to_string(p)), m);
      CAPTURE(d);
      CHECK(!r.terms.empty());
      CHECK(block_sum(r) + r.cancelled == r.source_points);
      check_branch_value(rs, r, m, rng);
    }
  }
  SUBCASE("errors") {
    const auto c3 = RootSystem::build("C3");
    CHECK_THROWS_AS(BranchRule::parse("split"), DomainError);
    CHECK_THROWS_AS(BranchRule::parse("split:x"), DomainError);
    CHECK_THROWS_AS(BranchRule::parse("cut"), DomainError);
    CHECK_THROWS_AS(branch(c3, BranchRule::parse("split:3"), qi({3, 2, 1})), DomainError);
    CHECK_THROWS_AS(branch(c3, BranchRule::parse("drop"), qi({3, 3, 1})), DomainError);
    CHECK_THROWS_AS(branch(RootSystem::build("G2"), BranchRule::parse("drop"), qi({1, 1})), DomainError);
  }
  SUBCASE("json") {
    const auto r = branch(RootSystem::build("A2"), BranchRule::parse("drop"), qi({2, 1, 0}));
    const auto j = to_json(r);
    CHECK(j["terms"].size() == 3);
    CHECK(j["source_points"] == 6);
    CHECK(to_string(r) == "O^±(1,0) - O^±(2,0) + O^±(2,1)");
  }
}
