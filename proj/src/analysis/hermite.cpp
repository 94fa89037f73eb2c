#include "wof/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wof {

double hermite(int n, double x) {
  if (n < 0) throw DomainError("Hermite degree must be nonnegative");
  double prev = 1, cur = 2 * x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = 2 * x * cur - 2 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_explicit(int n, double x) {
  if (n < 0) throw DomainError("Hermite degree must be nonnegative");
  if (n > 20) throw DomainError("explicit Hermite sum is for small degrees only");
  double s = 0;
  for (int m = 0; 2 * m <= n; ++m)
    s += (m % 2 ? -1.0 : 1.0) * std::pow(2 * x, n - 2 * m) / (static_cast<double>(factorial(m)) * factorial(n - 2 * m));
  return static_cast<double>(factorial(n)) * s;
}

SymVariant parse_sym_variant(std::string_view s) {
  if (s == "sym") return SymVariant::sym;
  if (s == "anti") return SymVariant::anti;
  throw DomainError("unknown variant '" + std::string(s) + "' (sym or anti)");
}

namespace {

void require_index(const MultiIndex& m, SymVariant v) {
  for (int k : m)
    if (k < 0) throw DomainError("multi-index entries must be nonnegative");
  if (v == SymVariant::anti)
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      if (m[i] <= m[i + 1]) throw DomainError("antisymmetric constructions need strictly decreasing m");
}

// Sum over S_n of sign^[anti] prod g(perm[i], i).
template <class G>
double perm_sum(std::size_t n, SymVariant v, G g) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double s = 0;
  do {
    double t = v == SymVariant::anti ? permutation_parity(perm) : 1;
    for (std::size_t i = 0; i < n; ++i) t *= g(perm[i], i);
    s += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

}  // namespace

double hermite_sym_anti(const MultiIndex& m, const RVec& x, SymVariant v) {
  if (m.size() != x.size() || m.empty()) throw DomainError("multi-index and point must have the same length");
  require_index(m, v);
  if (v == SymVariant::anti) {
    std::vector<std::vector<double>> a(m.size(), std::vector<double>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = hermite(m[i], x[j]);
    return det(a);
  }
  return perm_sum(m.size(), v, [&](int p, std::size_t i) { return hermite(m[p], x[i]); });
}

double hermite_function(const MultiIndex& m, const RVec& x, SymVariant v) {
  RVec s(x.size());
  double r2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = std::sqrt(2 * kPi) * x[i];
    r2 += x[i] * x[i];
  }
  return std::exp(-kPi * r2) * hermite_sym_anti(m, s, v);
}

HermiteGridTransform::HermiteGridTransform(SymVariant v, int points, double box) : v_(v), p_(points) {
  if (points < 2 || !(box > 0)) throw DomainError("quadrature needs points >= 2 and box > 0");
  if (static_cast<double>(points) > 5000) throw SizeLimitError("quadrature grid too large (points > 5000)");
  const double h = 2 * box / points;
  t_.resize(p_);
  for (int j = 0; j < p_; ++j) t_[j] = -box + (j + 0.5) * h;
  kernel_.resize(static_cast<std::size_t>(p_) * p_);
  for (int j = 0; j < p_; ++j)
    for (int k = 0; k < p_; ++k) kernel_[static_cast<std::size_t>(j) * p_ + k] = h * std::polar(1.0, 2 * kPi * t_[j] * t_[k]);
}

std::vector<Complex> HermiteGridTransform::sample(const std::function<Complex(double, double)>& f) const {
  std::vector<Complex> out(static_cast<std::size_t>(p_) * p_);
  for (int i = 0; i < p_; ++i)
    for (int j = 0; j < p_; ++j) out[static_cast<std::size_t>(i) * p_ + j] = f(t_[i], t_[j]);
  return out;
}

std::vector<Complex> HermiteGridTransform::apply(const std::vector<Complex>& f) const {
  const std::size_t p = p_;
  if (f.size() != p * p) throw DomainError("grid function has the wrong size");
  // G = K F K (K symmetric): G(l1, l2) = sum e^{2 pi i (l1 x1 + l2 x2)} f(x1, x2) h^2.
  std::vector<Complex> tmp(p * p, 0.0), g(p * p, 0.0);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      const Complex fab = f[a * p + b];
      const Complex* krow = &kernel_[b * p];
      Complex* out = &tmp[a * p];
      for (std::size_t d = 0; d < p; ++d) out[d] += fab * krow[d];
    }
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t a = 0; a < p; ++a) {
      const Complex k = kernel_[c * p + a];
      const Complex* in = &tmp[a * p];
      Complex* out = &g[c * p];
      for (std::size_t d = 0; d < p; ++d) out[d] += k * in[d];
    }
  // (1/|S_2|) times the sum over S_2 of the swapped label.
  std::vector<Complex> r(p * p);
  const double s = v_ == SymVariant::anti ? -1.0 : 1.0;
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t d = 0; d < p; ++d) r[c * p + d] = 0.5 * (g[c * p + d] + s * g[d * p + c]);
  return r;
}

HermiteEigenCheck transform_eigen_check(const MultiIndex& m, SymVariant v, int points, double box) {
  if (m.size() != 2) throw DomainError("the transform check is implemented for n = 2");
  require_index(m, v);
  const HermiteGridTransform t(v, points, box);
  const auto f = t.sample([&](double a, double b) { return Complex(hermite_function(m, {a, b}, v)); });
  const auto g = t.apply(f);
  const int total = m[0] + m[1];
  const Complex ev = std::pow(Complex(0, 1), total);
  double diff = 0, scale = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    diff = std::max(diff, std::abs(g[i] - ev * f[i]));
    scale = std::max(scale, std::abs(f[i]));
  }
  return {ev, diff / scale};
}

double fourth_power_residual(const HermiteGridTransform& t, const std::vector<Complex>& f) {
  auto g = f;
  for (int k = 0; k < 4; ++k) g = t.apply(g);
  double diff = 0, scale = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    diff = std::max(diff, std::abs(g[i] - f[i]));
    scale = std::max(scale, std::abs(f[i]));
  }
  if (scale == 0) throw DomainError("fourth power check needs a nonzero function");
  return diff / scale;
}

// ---- polynomial families ----

double poly_eval(const std::vector<double>& c, double x) {
  double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

PolyFamily monomial_family() {
  return {"monomial",
          [](int k) {
            std::vector<double> c(k + 1, 0.0);
            c[k] = 1;
            return c;
          },
          [](double) { return 1.0; }};
}

namespace {

std::vector<double> hermite_coefficients(int n) {
  std::vector<double> prev{1}, cur{0, 2};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

PolyFamily hermite_family() {
  return {"hermite", hermite_coefficients, [](double x) { return std::exp(-x * x); }};
}

PolyFamily orthonormal_hermite_family() {
  return {"hermite-orthonormal",
          [](int k) {
            auto c = hermite_coefficients(k);
            const double norm = std::sqrt(std::ldexp(std::tgamma(k + 1.0), k) * std::sqrt(kPi));
            for (auto& v : c) v /= norm;
            return c;
          },
          [](double x) { return std::exp(-x * x); }};
}

PolyFamily family_by_name(std::string_view s) {
  if (s == "monomial") return monomial_family();
  if (s == "hermite") return hermite_family();
  if (s == "hermite-orthonormal") return orthonormal_hermite_family();
  throw DomainError("unknown polynomial family '" + std::string(s) + "' (monomial, hermite, hermite-orthonormal)");
}

double p_sym(const PolyFamily& f, const MultiIndex& m, const RVec& x) {
  if (m.size() != x.size() || m.empty()) throw DomainError("multi-index and point must have the same length");
  require_index(m, SymVariant::sym);
  // Distinct arrangements of m: permute indices sorted by value, skipping repeats.
  std::vector<int> a(m.begin(), m.end());
  std::sort(a.begin(), a.end());
  double s = 0;
  do {
    double t = 1;
    for (std::size_t i = 0; i < a.size(); ++i) t *= poly_eval(f.coefficients(a[i]), x[i]);
    s += t;
  } while (std::next_permutation(a.begin(), a.end()));
  return s;
}

double p_anti(const PolyFamily& f, const MultiIndex& m, const RVec& x) {
  if (m.size() != x.size() || m.empty()) throw DomainError("multi-index and point must have the same length");
  require_index(m, SymVariant::anti);
  std::vector<std::vector<double>> a(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto c = f.coefficients(m[i]);
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = poly_eval(c, x[j]);
  }
  return det(a);
}

double P_anti(const PolyFamily& f, const MultiIndex& m, const RVec& x) {
  if (m.size() != x.size() || m.empty()) throw DomainError("multi-index and point must have the same length");
  require_index(m, SymVariant::anti);
  const std::size_t n = m.size();
  int top = 0;
  std::vector<std::vector<double>> coef;
  for (int k : m) {
    coef.push_back(f.coefficients(k));
    top = std::max(top, static_cast<int>(coef.back().size()) - 1);
  }
  // hcomp[j][d] = complete homogeneous h_d(x_1..x_{j+1}); p[x_1..x_{j+1}] = sum_k c_k h_{k-j}.
  std::vector<std::vector<double>> hcomp(n, std::vector<double>(top + 1, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    for (int d = 0; d <= top; ++d) {
      const double without = j == 0 ? (d == 0 ? 1.0 : 0.0) : hcomp[j - 1][d];
      hcomp[j][d] = without + (d > 0 ? x[j] * hcomp[j][d - 1] : 0.0);
    }
  std::vector<std::vector<double>> dd(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < coef[i].size(); ++k) dd[i][j] += coef[i][k] * hcomp[j][k - j];
  // det p(x_j) = prod_{j<k} (x_k - x_j) det dd, and the quotient uses prod_{i<j} (x_i - x_j).
  const double sign = (n * (n - 1) / 2) % 2 ? -1.0 : 1.0;
  return sign * det(dd);
}

double ordered_inner_product(const PolyFamily& f, const MultiIndex& m, const MultiIndex& mp, SymVariant v, int points,
                             double box) {
  const std::size_t n = m.size();
  if (mp.size() != n || n == 0) throw DomainError("multi-indices must have the same length");
  const double total = std::pow(static_cast<double>(points), static_cast<double>(n));
  if (total > 2e7) throw SizeLimitError("ordered_inner_product: grid of " + std::to_string(total) + " points");
  const double h = 2 * box / points;
  std::vector<double> t(points), w(points);
  for (int j = 0; j < points; ++j) {
    t[j] = -box + (j + 0.5) * h;
    w[j] = f.weight(t[j]) * h;
  }
  std::vector<int> idx(n, 0);
  double s = 0;
  const auto value = [&](const MultiIndex& k, const RVec& x) { return v == SymVariant::anti ? p_anti(f, k, x) : p_sym(f, k, x); };
  while (true) {
    bool ordered = true;
    std::size_t ties = 1, run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (idx[i] < idx[i + 1]) ordered = false;
      if (idx[i] == idx[i + 1]) {
        ++run;
        ties *= run;  // stabilizer of x within S_n
      } else {
        run = 1;
      }
    }
    if (ordered) {
      RVec x(n);
      double weight = 1;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = t[idx[i]];
        weight *= w[idx[i]];
      }
      s += weight / static_cast<double>(ties) * value(m, x) * value(mp, x);
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == points) idx[k++] = 0;
    if (k == n) break;
  }
  return s;
}

}  // namespace wof
