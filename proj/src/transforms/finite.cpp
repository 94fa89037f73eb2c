#include "wof/transforms.hpp"

namespace wof {

FinitePlan FinitePlan::build(const RootSystem& rs, int M, std::vector<QVec> labels, double tol) {
  FinitePlan p;
  p.diagram_ = rs.label();
  p.M_ = M;
  p.w_ = rs.weyl_order();
  p.grid_ = grid_FM(rs, M).interior();
  p.t_size_ = Tm_expand(rs, grid_FM(rs, M)).size();
  if (labels.empty()) labels = default_labels(rs, M);
  for (const auto& l : labels) {
    if (l.size() != static_cast<std::size_t>(rs.rank()))
      throw DomainError("finite plan: label (" + to_string(l) + ") has the wrong rank");
    for (const auto& v : l)
      if (!is_integer(v)) throw DomainError("finite plan: label (" + to_string(l) + ") is not integral");
    if (!is_strictly_dominant(l)) throw DomainError("finite plan: label (" + to_string(l) + ") is not strictly dominant");
  }
  if (labels.size() > p.grid_.size())
    throw NonInvertiblePlanError("finite plan: " + std::to_string(labels.size()) + " labels but only " +
                                 std::to_string(p.grid_.size()) + " interior grid points");
  p.labels_ = std::move(labels);

  std::vector<RVec> xs;
  for (const auto& g : p.grid_) xs.push_back(to_double(g.omega));
  for (const auto& l : p.labels_) {
    p.fns_.emplace_back(rs, OrbitKind::antisymmetric, l);
    std::vector<Complex> row;
    for (const auto& x : xs) row.push_back(p.fns_.back()(x));
    p.matrix_.push_back(std::move(row));
  }

  const std::size_t L = p.labels_.size();
  const double c = p.constant(), w = static_cast<double>(p.w_);
  p.gram_.assign(L, std::vector<Complex>(L));
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) {
      Complex s = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) s += p.matrix_[a][k] * std::conj(p.matrix_[b][k]);
      p.gram_[a][b] = w * s;
      if (a == b)
        p.max_diag_err_ = std::max(p.max_diag_err_, std::abs(p.gram_[a][b] - c));
      else
        p.max_off_ = std::max(p.max_off_, std::abs(p.gram_[a][b]));
    }
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) {
      const double err = a == b ? std::abs(p.gram_[a][b] - c) : std::abs(p.gram_[a][b]);
      if (err > tol * c)
        throw NonInvertiblePlanError("finite plan on " + p.diagram_ + ", M=" + std::to_string(M) + ": labels (" +
                                     to_string(p.labels_[a]) + ") and (" + to_string(p.labels_[b]) +
                                     ") are not separated (Gram entry " + std::to_string(std::abs(p.gram_[a][b])) +
                                     ", expected " + (a == b ? std::to_string(c) : std::string("0")) + ")");
    }
  return p;
}

std::vector<Complex> FinitePlan::forward(const std::vector<Complex>& f) const {
  if (f.size() != grid_.size())
    throw DomainError("finite transform: signal has " + std::to_string(f.size()) + " values, grid has " +
                      std::to_string(grid_.size()));
  // <f, phi>_T = |W| * sum over interior points, since f vanishes on walls.
  const double scale = static_cast<double>(w_) / constant();
  std::vector<Complex> a(labels_.size());
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    Complex s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += f[k] * std::conj(matrix_[l][k]);
    a[l] = scale * s;
  }
  return a;
}

std::vector<Complex> FinitePlan::inverse(const std::vector<Complex>& a) const {
  if (a.size() != labels_.size())
    throw DomainError("finite transform: " + std::to_string(a.size()) + " coefficients for " +
                      std::to_string(labels_.size()) + " labels");
  std::vector<Complex> f(grid_.size());
  for (std::size_t l = 0; l < a.size(); ++l)
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += a[l] * matrix_[l][k];
  return f;
}

Complex FinitePlan::synthesize(const std::vector<Complex>& a, const RVec& x) const {
  if (a.size() != labels_.size()) throw DomainError("finite transform: coefficient count mismatch");
  Complex s = 0;
  for (std::size_t l = 0; l < a.size(); ++l) s += a[l] * fns_[l](x);
  return s;
}

}  // namespace wof
