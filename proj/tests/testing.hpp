// Small helpers shared by the unit tests.
#pragma once

#include "wof/core.hpp"

#include <doctest.h>

#include <random>

namespace wof::test {

inline QVec q(std::initializer_list<Rational> xs) { return QVec(xs); }

inline QVec qi(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline RVec random_point(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  RVec x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

// Strictly dominant integral weight with coordinates in 1..hi.
inline QVec random_strict(std::mt19937_64& rng, int n, int hi = 4) {
  std::uniform_int_distribution<int> u(1, hi);
  QVec v;
  for (int i = 0; i < n; ++i) v.emplace_back(u(rng));
  return v;
}

}  // namespace wof::test
