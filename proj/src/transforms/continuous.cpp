#include "wof/transforms.hpp"

namespace wof {

namespace {

// Midpoint nodes of [0, hi_i] with q.points per axis; calls visit(node, cell volume).
template <class Visit>
void midpoint_box(const RVec& hi, const QuadSpec& q, std::size_t evals_per_node, Visit&& visit) {
  const int n = static_cast<int>(hi.size());
  if (q.points < 1) throw DomainError("quadrature: points per axis must be positive");
  const double nodes = std::pow(static_cast<double>(q.points), n);
  if (nodes * static_cast<double>(evals_per_node) > q.budget)
    throw SizeLimitError("quadrature budget exceeded: " + std::to_string(nodes) + " nodes x " +
                         std::to_string(evals_per_node) + " evaluations");
  double cell = 1;
  for (double h : hi) cell *= h / q.points;
  std::vector<int> idx(n, 0);
  RVec x(n);
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = (idx[i] + 0.5) * hi[i] / q.points;
    visit(x, cell);
    int i = 0;
    while (i < n && ++idx[i] == q.points) idx[i++] = 0;
    if (i == n) break;
  }
}

bool inside_F(const RootSystem& rs, const RVec& x) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0) return false;
    s += rs.comarks()[i] * x[i];
  }
  return s < 1;
}

RVec F_box(const RootSystem& rs) {
  RVec hi;
  for (int c : rs.comarks()) hi.push_back(1.0 / c);
  return hi;
}

}  // namespace

double fundamental_volume(const RootSystem& rs) {
  double v = 1;
  for (int i = 1; i <= rs.rank(); ++i) v /= i;
  for (int c : rs.comarks()) v /= c;
  return v;
}

std::vector<Complex> series_coefficients(const RootSystem& rs, const PointFunction& f, const std::vector<QVec>& labels,
                                         const QuadSpec& q) {
  std::vector<OrbitFunction> fns;
  for (const auto& l : labels) fns.emplace_back(rs, OrbitKind::antisymmetric, l);
  std::vector<Complex> c(labels.size());
  midpoint_box(F_box(rs), q, labels.size() + 1, [&](const RVec& x, double dv) {
    if (!inside_F(rs, x)) return;
    const Complex fx = f(x) * dv;
    for (std::size_t i = 0; i < fns.size(); ++i) c[i] += fx * std::conj(fns[i](x));
  });
  const double norm = static_cast<double>(rs.weyl_order()) * fundamental_volume(rs);
  for (auto& v : c) v /= norm;
  return c;
}

PlancherelReport plancherel(const RootSystem& rs, const PointFunction& f, const std::vector<QVec>& labels,
                            const QuadSpec& q) {
  PlancherelReport r;
  for (const auto& c : series_coefficients(rs, f, labels, q)) r.coeff_sum += std::norm(c);
  double s = 0;
  midpoint_box(F_box(rs), q, 1, [&](const RVec& x, double dv) {
    if (inside_F(rs, x)) s += std::norm(f(x)) * dv;
  });
  r.norm = s / (static_cast<double>(rs.weyl_order()) * fundamental_volume(rs));
  r.residual = std::abs(r.coeff_sum - r.norm);
  return r;
}

Complex chamber_transform(const RootSystem& rs, const PointFunction& f, const RVec& lambda, const QuadSpec& q) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("chamber transform: rank mismatch");
  const OrbitFunction phi(rs, OrbitKind::antisymmetric, lambda);
  Complex s = 0;
  midpoint_box(RVec(rs.rank(), q.box), q, 2, [&](const RVec& x, double dv) { s += f(x) * phi(x) * dv; });
  return s;
}

Complex chamber_inverse(const RootSystem& rs, const PointFunction& g, const RVec& x, const QuadSpec& q) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("chamber inverse: rank mismatch");
  // phi_lambda(x) = sum det(w) exp(2 pi i <lambda, w x>), with S w x precomputed.
  std::vector<RVec> sx;
  std::vector<double> sign;
  for (const auto& w : weyl_group(rs)) {
    sx.push_back(metric_apply(rs, act(w, x)));
    sign.push_back(w.det);
  }
  const std::size_t W = sx.size();
  Complex s = 0;
  midpoint_box(RVec(rs.rank(), q.box), q, W + 1, [&](const RVec& l, double dv) {
    Complex phi = 0;
    for (std::size_t k = 0; k < W; ++k) {
      double t = 0;
      for (std::size_t i = 0; i < l.size(); ++i) t += l[i] * sx[k][i];
      phi += sign[k] * std::polar(1.0, 2 * kPi * t);
    }
    s += g(l) * std::conj(phi) * dv;
  });
  std::vector<std::vector<double>> S(rs.rank(), std::vector<double>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) S[i][j] = to_double(rs.metric_S()[i][j]);
  return std::abs(det(S)) * s;
}

}  // namespace wof
