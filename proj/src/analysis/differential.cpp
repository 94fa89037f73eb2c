#include "wof/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace wof {

namespace {

// phi_lambda summed over the orthogonal-model group.
struct OrthPhi {
  std::vector<RVec> wm;
  std::vector<int> det;

  OrthPhi(const RootSystem& rs, const RVec& m) {
    for (const auto& g : orth_group(rs.family(), rs.orth_dim())) {
      wm.push_back(act(g, m));
      det.push_back(g.det);
    }
  }

  Complex operator()(const RVec& y) const {
    Complex s = 0;
    for (std::size_t k = 0; k < wm.size(); ++k) {
      double t = 0;
      for (std::size_t i = 0; i < y.size(); ++i) t += wm[k][i] * y[i];
      s += static_cast<double>(det[k]) * std::polar(1.0, 2 * kPi * t);
    }
    return s;
  }
};

void require_strict_label(const RootSystem& rs, const QVec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("label has the wrong rank");
  if (!is_strictly_dominant(lambda))
    throw DomainError("(" + to_string(lambda) + ") is not strictly dominant; phi_lambda vanishes identically");
}

void require_orth(const RootSystem& rs) {
  if (!rs.has_orthogonal_model()) throw DomainError(rs.label() + " has no orthogonal model (A, B, C, D only)");
}

// x interior to F with a margin of several steps in theta.
void require_room(const RootSystem& rs, const RVec& x, double h) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("point has the wrong rank");
  double slack = 1;
  double margin = 1;
  for (int i = 0; i < rs.rank(); ++i) {
    margin = std::min(margin, x[i]);
    slack -= rs.comarks()[i] * x[i];
  }
  margin = std::min(margin, slack);
  if (margin <= 4 * h) throw DomainError("x is too close to the boundary of F for the difference stencil");
}

double sq_norm(const RVec& m) {
  double s = 0;
  for (double v : m) s += v * v;
  return s;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

RVec shifted(RVec y, std::size_t i, double d) {
  y[i] += d;
  return y;
}

}  // namespace

RVec sample_interior(const RootSystem& rs, std::mt19937_64& rng, const QVec& lambda, double margin,
                     double min_abs) {
  require_strict_label(rs, lambda);
  const OrbitFunction phi(rs, OrbitKind::antisymmetric, lambda);
  std::exponential_distribution<double> e(1.0);
  const int n = rs.rank();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    // Normalized exponentials are uniform on the simplex of barycentric coordinates.
    std::vector<double> u(n + 1);
    double s = 0;
    for (auto& v : u) s += (v = e(rng));
    RVec x(n);
    bool ok = u[n] / s > margin;
    for (int i = 0; i < n; ++i) {
      x[i] = u[i] / s / rs.comarks()[i];
      ok = ok && x[i] > margin;
    }
    if (ok && std::abs(phi(x)) >= min_abs) return x;
  }
  throw DomainError("no interior point with |phi| >= " + std::to_string(min_abs) + " found");
}

Complex eval_orthogonal(const RootSystem& rs, const RVec& m, const RVec& y) {
  require_orth(rs);
  if (m.size() != static_cast<std::size_t>(rs.orth_dim()) || y.size() != m.size())
    throw DomainError("eval_orthogonal: expected " + std::to_string(rs.orth_dim()) + " coordinates");
  return OrthPhi(rs, m)(y);
}

EigenCheck laplace_check(const RootSystem& rs, const QVec& lambda, const RVec& x, double h) {
  return sigma_k_check(rs, lambda, x, 1, h);
}

EigenCheck sigma_k_check(const RootSystem& rs, const QVec& lambda, const RVec& x, int k, double h) {
  require_orth(rs);
  require_strict_label(rs, lambda);
  if (!(h > 0)) throw DomainError("step must be positive");
  if (k < 1 || k > 2) throw DomainError("sigma_k: only k = 1, 2 are supported");
  if (k == 2 && rs.rank() > 3) throw DomainError("sigma_2: rank <= 3 only");
  require_room(rs, x, h);
  const RVec m = to_orthogonal(rs, to_double(lambda));
  const RVec y = point_to_orthogonal(rs, x);
  const OrthPhi phi(rs, m);
  const std::size_t r = m.size();
  const Complex f0 = phi(y);

  EigenCheck out;
  if (k == 1) {
    Complex s = 0;
    for (std::size_t i = 0; i < r; ++i) s += (phi(shifted(y, i, h)) - 2.0 * f0 + phi(shifted(y, i, -h))) / (h * h);
    out.fd_value = s;
    out.eigen_value = -4 * kPi * kPi * sq_norm(m) * f0;
  } else {
    const double c[3] = {1, -2, 1};
    Complex s = 0;
    double sigma = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        Complex t = 0;
        for (int a = -1; a <= 1; ++a)
          for (int b = -1; b <= 1; ++b) t += c[a + 1] * c[b + 1] * phi(shifted(shifted(y, i, a * h), j, b * h));
        s += t / (h * h * h * h);
        sigma += m[i] * m[i] * m[j] * m[j];
      }
    out.fd_value = s;
    out.eigen_value = 16 * std::pow(kPi, 4) * sigma * f0;
  }
  out.rel_err = rel(out.fd_value, out.eigen_value);
  return out;
}

OmegaOperator omega_basis_operator(const RootSystem& rs) {
  const int n = rs.rank();
  OmegaOperator op;
  op.quarter.assign(n, std::vector<double>(n));
  op.metric_dual.assign(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Our M_ij is the transpose of the printed convention; dividing by <a_i,a_i> keeps it symmetric.
      op.quarter[i][j] = 0.5 * rs.cartan()[i][j] / to_double(rs.root_norms()[i]);
      op.metric_dual[i][j] = to_double(rs.metric_S_inv()[i][j]);
    }
  return op;
}

EigenCheck omega_laplace_check(const RootSystem& rs, const QVec& lambda, const RVec& x, double h) {
  require_strict_label(rs, lambda);
  require_room(rs, x, h);
  const OrbitFunction phi(rs, OrbitKind::antisymmetric, lambda);
  const auto c = omega_basis_operator(rs).metric_dual;
  const std::size_t n = x.size();
  const Complex f0 = phi(x);
  Complex s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += c[i][i] * (phi(shifted(x, i, h)) - 2.0 * f0 + phi(shifted(x, i, -h))) / (h * h);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c[i][j] == 0) continue;
      const Complex mixed = (phi(shifted(shifted(x, i, h), j, h)) - phi(shifted(shifted(x, i, h), j, -h)) -
                             phi(shifted(shifted(x, i, -h), j, h)) + phi(shifted(shifted(x, i, -h), j, -h))) /
                            (4 * h * h);
      s += 2 * c[i][j] * mixed;
    }
  }
  EigenCheck out;
  out.fd_value = s;
  out.eigen_value = -4 * kPi * kPi * to_double(inner(rs, lambda, lambda)) * f0;
  out.rel_err = rel(out.fd_value, out.eigen_value);
  return out;
}

ShiftVariant parse_shift_variant(std::string_view s) {
  if (s == "D" || s == "d") return ShiftVariant::D;
  if (s == "D_hat" || s == "D-hat" || s == "dhat" || s == "hat") return ShiftVariant::D_hat;
  if (s == "D_sym" || s == "D-sym" || s == "sym" || s == "D_on_sym") return ShiftVariant::D_on_sym;
  throw DomainError("unknown shift variant '" + std::string(s) + "' (D, D_hat, D_sym)");
}

const char* to_string(ShiftVariant v) {
  switch (v) {
    case ShiftVariant::D: return "D";
    case ShiftVariant::D_hat: return "D_hat";
    default: return "D_sym";
  }
}

ShiftCheck shift_operator_check(const RootSystem& rs, const QVec& lambda, const RVec& x, const RVec& y,
                                ShiftVariant v) {
  if (x.size() != static_cast<std::size_t>(rs.rank()) || y.size() != x.size())
    throw DomainError("shift check: points have the wrong rank");
  if (v == ShiftVariant::D_on_sym) {
    if (!is_dominant(lambda)) throw DomainError("(" + to_string(lambda) + ") is not dominant");
  } else {
    require_strict_label(rs, lambda);
  }
  // On a wall the antisymmetric function is identically zero.
  const bool strict = is_strictly_dominant(lambda);
  const std::optional<OrbitFunction> anti_fn =
      strict ? std::optional<OrbitFunction>(std::in_place, rs, OrbitKind::antisymmetric, lambda) : std::nullopt;
  const auto anti = [&](const RVec& p) { return anti_fn ? (*anti_fn)(p) : Complex(0); };
  const OrbitFunction sym(rs, OrbitKind::symmetric, lambda);
  const OrbitFunction full(rs, OrbitKind::normalized_symmetric, lambda);
  const auto input = [&](const RVec& p) { return v == ShiftVariant::D_on_sym ? sym(p) : anti(p); };

  ShiftCheck out;
  for (const auto& w : weyl_group(rs)) {
    RVec p = act(w, x);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += y[i];
    const double sgn = v == ShiftVariant::D_hat ? 1.0 : static_cast<double>(w.det);
    out.lhs += sgn * input(p);
  }
  switch (v) {
    case ShiftVariant::D:
      out.rhs_stated = full(y) * anti(x);
      out.rhs_expanded = out.rhs_stated;
      break;
    case ShiftVariant::D_hat:
      out.rhs_stated = anti(y) * anti(x);
      out.rhs_expanded = anti(y) * full(x);
      break;
    case ShiftVariant::D_on_sym:
      out.rhs_stated = anti(y) * sym(x);
      out.rhs_expanded = anti(y) * anti(x);
      break;
  }
  auto err = [](Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  out.rel_err_stated = err(out.lhs, out.rhs_stated);
  out.rel_err = err(out.lhs, out.rhs_expanded);
  return out;
}

double derivative_identity_residual(const RootSystem& rs, const QVec& lambda, const RVec& x, double h) {
  require_orth(rs);
  require_strict_label(rs, lambda);
  const RVec m = to_orthogonal(rs, to_double(lambda));
  const RVec y = point_to_orthogonal(rs, x);
  const OrthPhi phi(rs, m);
  const auto group = orth_group(rs.family(), rs.orth_dim());
  double worst = 0, scale = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    Complex s = 0;
    double mag = 0;
    for (const auto& g : group) {
      const RVec p = act(g, y);
      const Complex d = (phi(shifted(p, i, h)) - phi(shifted(p, i, -h))) / (2 * h);
      s += d;
      mag += std::abs(d);
    }
    worst = std::max(worst, std::abs(s));
    scale = std::max(scale, mag);
  }
  return scale > 0 ? worst / scale : 0.0;
}

}  // namespace wof
