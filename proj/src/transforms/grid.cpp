#include "wof/transforms.hpp"

#include <algorithm>
#include <set>

namespace wof {

namespace {

// Enumerate s_1..s_n >= lo with sum s_i k_i <= M; s_0 is the slack.
void enumerate(const std::vector<int>& k, int M, int lo, std::vector<int>& cur, std::size_t i,
               std::vector<std::vector<int>>& out) {
  if (i == k.size()) {
    int used = 0;
    for (std::size_t j = 0; j < k.size(); ++j) used += cur[j] * k[j];
    std::vector<int> s{M - used};
    s.insert(s.end(), cur.begin(), cur.end());
    out.push_back(std::move(s));
    return;
  }
  int used = 0;
  for (std::size_t j = 0; j < i; ++j) used += cur[j] * k[j];
  for (int v = lo; used + v * k[i] <= M; ++v) {
    cur[i] = v;
    enumerate(k, M, lo, cur, i + 1, out);
  }
}

std::vector<std::vector<int>> solutions(const std::vector<int>& k, int M, int lo) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k.size(), 0);
  enumerate(k, M, lo, cur, 0, out);
  return out;
}

Rational floor_q(const Rational& v) {
  const boost::multiprecision::cpp_int num = numerator(v), den = denominator(v);
  boost::multiprecision::cpp_int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

}  // namespace

std::vector<GridPoint> GridFM::interior() const {
  std::vector<GridPoint> out;
  for (const auto& p : points)
    if (p.interior) out.push_back(p);
  return out;
}

QVec coweight_to_omega(const RootSystem& rs, const QVec& c) {
  QVec x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) x[i] = c[i] * 2 / rs.root_norms()[i];
  return x;
}

QVec omega_to_coweight(const RootSystem& rs, const QVec& x) {
  QVec c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i] * rs.root_norms()[i] / 2;
  return c;
}

// alpha_j^vee = (2/|a_j|^2) sum_k M_jk omega_k, so c = theta M^{-1} diag(|a_j|^2/2).
QVec reduce_mod_coroot(const RootSystem& rs, const QVec& x) {
  const int n = rs.rank();
  if (x.size() != static_cast<std::size_t>(n)) throw DomainError("reduce_mod_coroot: dimension mismatch");
  const auto& Minv = rs.cartan_inv();
  const auto& M = rs.cartan();
  QVec c(n);
  for (int j = 0; j < n; ++j) {
    Rational v = 0;
    for (int k = 0; k < n; ++k) v += x[k] * Minv[k][j];
    v *= rs.root_norms()[j] / 2;
    c[j] = v - floor_q(v);
  }
  QVec out(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out[k] += c[j] * 2 / rs.root_norms()[j] * M[j][k];
  return out;
}

GridFM grid_FM(const RootSystem& rs, int M) {
  if (M < 1) throw DomainError("grid_FM: M must be positive");
  GridFM g;
  g.M = M;
  for (auto& s : solutions(rs.marks(), M, 0)) {
    GridPoint p;
    p.s = s;
    for (std::size_t i = 1; i < s.size(); ++i) p.coweight.push_back(Rational(s[i], M));
    p.omega = coweight_to_omega(rs, p.coweight);
    p.interior = true;
    for (int v : s) p.interior &= v > 0;
    g.points.push_back(std::move(p));
  }
  return g;
}

std::vector<QVec> Tm_expand(const RootSystem& rs, const GridFM& grid) {
  if (!rs.group_enumerable()) throw SizeLimitError("Tm_expand: Weyl group of " + rs.label() + " too large");
  std::set<QVec> out;
  for (const auto& p : grid.points)
    for (const auto& y : orbit(rs, p.omega)) out.insert(reduce_mod_coroot(rs, y));
  return {out.begin(), out.end()};
}

std::vector<QVec> Tm_lattice(const RootSystem& rs, int m) {
  if (m < 1) throw DomainError("Tm_lattice: m must be positive");
  const int n = rs.rank();
  std::vector<QVec> out;
  std::vector<int> d(n, 0);
  while (true) {
    QVec x(n, Rational(0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) x[k] += Rational(d[j], m) * 2 / rs.root_norms()[j] * rs.cartan()[j][k];
    out.push_back(reduce_mod_coroot(rs, x));
    int i = 0;
    while (i < n && ++d[i] == m) d[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QVec> default_labels(const RootSystem& rs, int M) {
  if (M < 1) throw DomainError("default_labels: M must be positive");
  std::vector<QVec> out;
  for (auto& s : solutions(rs.dual_marks(), M, 1)) {
    if (s[0] < 1) continue;
    QVec l;
    for (std::size_t i = 1; i < s.size(); ++i) l.emplace_back(s[i]);
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace wof
