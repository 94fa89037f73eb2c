#include "wof/transforms.hpp"

#include "kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wof {

namespace {

// Descending n-tuples from [lo, hi]: strictly (anti) or weakly (sym/plain) decreasing.
void tuples(int lo, int hi, int n, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  const int top = cur.empty() ? hi : (strict ? cur.back() - 1 : cur.back());
  for (int v = top; v >= lo; --v) {
    cur.push_back(v);
    tuples(lo, hi, n, strict, cur, out);
    cur.pop_back();
  }
}

// |S_v|: product of factorials of the multiplicities.
double stabilizer(const std::vector<int>& v) {
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  double s = 1;
  for (auto [x, m] : mult) s *= static_cast<double>(factorial(m));
  return s;
}

std::string fraction(int k, int N) {
  const int g = std::gcd(k, N);
  if (N / g == 1) return std::to_string(k / g);
  return std::to_string(k / g) + "/" + std::to_string(N / g);
}

}  // namespace

DiscretePlan DiscretePlan::build(std::string_view kind_name, int n, int N) {
  DiscretePlan p;
  p.kind_ = DiscreteKind::parse(kind_name);
  if (n < 1) throw DomainError("discrete transform: n must be positive");
  if (p.kind_.sym == DiscreteKind::Sym::plain && n != 1)
    throw DomainError("1-D kind '" + p.kind_.name() + "' takes n = 1; use the anti/sym variants for n > 1");
  if (n > 6) throw SizeLimitError("discrete transform: n > 6 not supported");
  p.n_ = n;
  p.N_ = N;
  const auto k1 = detail::kernel_1d(p.kind_.base, N);
  const bool anti = p.kind_.sym == DiscreteKind::Sym::anti, sym = p.kind_.sym == DiscreteKind::Sym::sym;
  std::vector<int> cur;
  tuples(k1.r_lo, k1.r_hi, n, anti, cur, p.labels_);
  tuples(k1.k_lo, k1.k_hi, n, anti, cur, p.grid_);
  if (p.labels_.empty()) throw DomainError("discrete transform: no labels for n=" + std::to_string(n) + ", N=" + std::to_string(N));
  if (p.labels_.size() != p.grid_.size())
    throw DomainError("discrete transform: " + std::to_string(p.labels_.size()) + " labels vs " +
                      std::to_string(p.grid_.size()) + " grid points");
  if (p.labels_.size() > 20000) throw SizeLimitError("discrete transform: plan too large");

  std::vector<int> perm(n);
  std::vector<std::pair<std::vector<int>, int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.emplace_back(perm, permutation_parity(perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  const double sn = static_cast<double>(perms.size());
  const double pre = 1.0 / std::sqrt(sn);

  // Per-coordinate kernel values, indexed [r - r_lo][k - k_lo].
  const int nr = k1.r_hi - k1.r_lo + 1, nk = k1.k_hi - k1.k_lo + 1;
  std::vector<std::vector<Complex>> v(nr, std::vector<Complex>(nk));
  for (int r = 0; r < nr; ++r)
    for (int k = 0; k < nk; ++k) v[r][k] = k1.value(r + k1.r_lo, k + k1.k_lo);

  for (const auto& r : p.labels_) {
    std::vector<Complex> row;
    for (const auto& k : p.grid_) {
      Complex s = 0;
      for (const auto& [w, parity] : perms) {
        Complex t = anti ? static_cast<double>(parity) : 1.0;
        for (int i = 0; i < n; ++i) t *= v[r[w[i]] - k1.r_lo][k[i] - k1.k_lo];
        s += t;
      }
      row.push_back(n == 1 ? s : pre * s);
    }
    p.matrix_.push_back(std::move(row));
    double e = sym ? stabilizer(r) : 1.0;
    for (int x : r) e *= k1.norm(x);
    p.expected_.push_back(e);
  }
  for (const auto& k : p.grid_) {
    double w = n == 1 ? 1.0 : sn;
    for (int x : k) w *= k1.weight(x);
    if (sym) w /= stabilizer(k);
    p.weights_.push_back(w);
  }
  return p;
}

std::string DiscretePlan::point_label(std::size_t i) const {
  const bool frac = detail::kernel_1d(kind_.base, N_).fraction_grid;
  std::string s;
  for (std::size_t j = 0; j < grid_[i].size(); ++j) {
    if (j) s += ',';
    s += frac ? fraction(grid_[i][j], N_) : std::to_string(grid_[i][j]);
  }
  return s;
}

std::string DiscretePlan::label_string(std::size_t i) const {
  std::string s;
  for (std::size_t j = 0; j < labels_[i].size(); ++j) s += (j ? "," : "") + std::to_string(labels_[i][j]);
  return s;
}

std::vector<std::vector<Complex>> DiscretePlan::gram() const {
  const std::size_t L = labels_.size();
  std::vector<std::vector<Complex>> g(L, std::vector<Complex>(L));
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = a; b < L; ++b) {
      Complex s = 0;
      for (std::size_t k = 0; k < grid_.size(); ++k) s += weights_[k] * matrix_[a][k] * std::conj(matrix_[b][k]);
      g[a][b] = s;
      g[b][a] = std::conj(s);
    }
  return g;
}

double DiscretePlan::gram_residual() const {
  const auto g = gram();
  double r = 0;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) r = std::max(r, std::abs(g[a][b] - (a == b ? expected_[a] : 0.0)));
  return r;
}

std::vector<Complex> DiscretePlan::forward(const std::vector<Complex>& f) const {
  if (f.size() != grid_.size())
    throw DomainError("discrete transform: signal has " + std::to_string(f.size()) + " values, grid has " +
                      std::to_string(grid_.size()));
  std::vector<Complex> a(labels_.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    Complex s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += weights_[k] * f[k] * std::conj(matrix_[r][k]);
    a[r] = s / expected_[r];
  }
  return a;
}

std::vector<Complex> DiscretePlan::inverse(const std::vector<Complex>& a) const {
  if (a.size() != labels_.size())
    throw DomainError("discrete transform: " + std::to_string(a.size()) + " coefficients for " +
                      std::to_string(labels_.size()) + " labels");
  std::vector<Complex> f(grid_.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += a[r] * matrix_[r][k];
  return f;
}

}  // namespace wof
