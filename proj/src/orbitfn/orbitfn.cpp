#include "wof/orbitfn.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace wof {

OrbitKind parse_orbit_kind(std::string_view s) {
  std::string k(s);
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  if (k == "sym" || k == "symmetric") return OrbitKind::symmetric;
  if (k == "sym-norm" || k == "normalized" || k == "normalized_symmetric") return OrbitKind::normalized_symmetric;
  if (k == "anti" || k == "antisymmetric") return OrbitKind::antisymmetric;
  throw DomainError("unknown orbit function kind '" + std::string(s) + "' (expected sym, sym-norm or anti)");
}

const char* to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::symmetric: return "sym";
    case OrbitKind::normalized_symmetric: return "sym-norm";
    case OrbitKind::antisymmetric: return "anti";
  }
  return "?";
}

namespace {

RVec s_times(const RootSystem& rs, const RVec& v) { return metric_apply(rs, v); }

void check_rank(const RootSystem& rs, std::size_t k, const char* what) {
  if (k != static_cast<std::size_t>(rs.rank()))
    throw DomainError(std::string("dimension mismatch in ") + what + ": expected " + std::to_string(rs.rank()) +
                      " coordinates, got " + std::to_string(k));
}

}  // namespace

void OrbitFunction::add_term(const RootSystem& rs, const RVec& w_lambda, double c) {
  s_lambda_.push_back(s_times(rs, w_lambda));
  coef_.push_back(c);
}

OrbitFunction::OrbitFunction(const RootSystem& rs, OrbitKind kind, const QVec& lambda) {
  check_rank(rs, lambda.size(), "orbit function label");
  switch (kind) {
    case OrbitKind::antisymmetric: {
      if (!is_strictly_dominant(lambda))
        throw DomainError("antisymmetric orbit functions need a strictly dominant label; (" + to_string(lambda) +
                          ") is not");
      const RVec l = to_double(lambda);
      for (const auto& w : weyl_group(rs)) add_term(rs, act(w, l), w.det);
      break;
    }
    case OrbitKind::symmetric:
    case OrbitKind::normalized_symmetric: {
      const auto pts = orbit(rs, lambda);
      const double c = kind == OrbitKind::symmetric ? 1.0 : double(rs.weyl_order() / pts.size());
      for (const auto& p : pts) add_term(rs, to_double(p), c);
      break;
    }
  }
}

OrbitFunction::OrbitFunction(const RootSystem& rs, OrbitKind kind, const RVec& lambda) {
  check_rank(rs, lambda.size(), "orbit function label");
  const auto& group = weyl_group(rs);
  if (kind == OrbitKind::antisymmetric) {
    for (double v : lambda)
      if (!(v > 0)) throw DomainError("antisymmetric orbit functions need a strictly dominant label");
    for (const auto& w : group) add_term(rs, act(w, lambda), w.det);
    return;
  }
  double c = 1.0;
  if (kind == OrbitKind::symmetric) {
    int stab = 0;
    for (const auto& w : group) {
      const RVec y = act(w, lambda);
      double d = 0;
      for (std::size_t i = 0; i < y.size(); ++i) d = std::max(d, std::abs(y[i] - lambda[i]));
      if (d < 1e-12 * (1 + std::abs(lambda[0]))) ++stab;
    }
    c = 1.0 / stab;
  }
  for (const auto& w : group) add_term(rs, act(w, lambda), c);
}

Complex OrbitFunction::operator()(const RVec& x) const {
  double re = 0, im = 0;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    const double a = 2 * kPi * dot(s_lambda_[k], x);
    re += coef_[k] * std::cos(a);
    im += coef_[k] * std::sin(a);
  }
  return {re, im};
}

Complex eval(const RootSystem& rs, OrbitKind kind, const QVec& lambda, const RVec& x) {
  check_rank(rs, x.size(), "evaluation point");
  return OrbitFunction(rs, kind, lambda)(x);
}

Complex eval(const RootSystem& rs, OrbitKind kind, const RVec& lambda, const RVec& x) {
  check_rank(rs, x.size(), "evaluation point");
  return OrbitFunction(rs, kind, lambda)(x);
}

namespace {

const std::vector<SignedPerm>& cached_orth_group(Family f, int dim) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<SignedPerm>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(f), dim}];
  if (!slot) slot = std::make_unique<const std::vector<SignedPerm>>(orth_group(f, dim));
  return *slot;
}

int orth_stabilizer(Family f, const RVec& m) {
  int count = 0;
  for (const auto& g : cached_orth_group(f, static_cast<int>(m.size()))) {
    const RVec y = act(g, m);
    bool same = true;
    for (std::size_t i = 0; i < m.size() && same; ++i) same = std::abs(y[i] - m[i]) <= 1e-12 * (1 + std::abs(m[i]));
    if (same) ++count;
  }
  return count;
}

using CMat = std::vector<std::vector<Complex>>;

CMat kernel(const RVec& m, const RVec& x, Complex (*f)(double)) {
  CMat a(m.size(), std::vector<Complex>(x.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) a[i][j] = f(2 * kPi * m[i] * x[j]);
  return a;
}

Complex k_exp(double t) { return std::polar(1.0, t); }
Complex k_cos(double t) { return std::cos(t); }
Complex k_sin(double t) { return std::sin(t); }

}  // namespace

Complex eval_closed_form(const RootSystem& rs, OrbitKind kind, const RVec& m, const RVec& x) {
  if (!rs.has_orthogonal_model())
    throw DomainError("no determinant form for " + rs.label() + "; use the sum definition");
  const auto dim = static_cast<std::size_t>(rs.orth_dim());
  if (m.size() != dim || x.size() != dim)
    throw DomainError("closed forms take " + std::to_string(dim) + " orthogonal coordinates");
  const int n = static_cast<int>(dim);
  const bool anti = kind == OrbitKind::antisymmetric;
  Complex v;
  switch (rs.family()) {
    case Family::A: {
      const CMat e = kernel(m, x, k_exp);
      v = anti ? det(e) : permanent(e);
      break;
    }
    case Family::B:
    case Family::C:
      v = anti ? std::pow(Complex(0, 2), n) * det(kernel(m, x, k_sin))
               : std::pow(2.0, n) * permanent(kernel(m, x, k_cos));
      break;
    case Family::D: {
      const Complex half_sin = 0.5 * std::pow(Complex(0, 2), n);
      const double half_cos = std::pow(2.0, n - 1);
      if (anti)
        v = half_cos * det(kernel(m, x, k_cos)) + half_sin * det(kernel(m, x, k_sin));
      else
        v = half_cos * permanent(kernel(m, x, k_cos)) + half_sin * permanent(kernel(m, x, k_sin));
      break;
    }
    default:
      throw DomainError("no determinant form for " + rs.label());
  }
  if (kind == OrbitKind::symmetric) v /= orth_stabilizer(rs.family(), m);
  return v;
}

RhoValues rho_products(const RootSystem& rs, const RVec& x) {
  check_rank(rs, x.size(), "evaluation point");
  const RVec sx = metric_apply(rs, x);
  double sin_prod = 1, cos_prod = 1;
  for (const auto& a : rs.positive_roots()) {
    const double t = kPi * dot(to_double(a), sx);
    sin_prod *= std::sin(t);
    cos_prod *= std::cos(t);
  }
  const int r = static_cast<int>(rs.positive_roots().size());
  RhoValues out;
  out.anti_product = std::pow(Complex(0, 2), r) * sin_prod;
  out.sym_product = std::pow(2.0, r) * cos_prod;
  out.anti_sum = eval(rs, OrbitKind::antisymmetric, rs.rho(), x);
  out.sym_sum = eval(rs, OrbitKind::symmetric, rs.rho(), x);
  return out;
}

RhoOrth rho_products_orth(const RootSystem& rs, const RVec& x) {
  if (!rs.has_orthogonal_model()) throw DomainError("no orthogonal model for " + rs.label());
  if (x.size() != static_cast<std::size_t>(rs.orth_dim())) throw DomainError("dimension mismatch in rho_products_orth");
  const int n = static_cast<int>(x.size());
  double s = 1, c = 1;
  int r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s *= std::sin(kPi * (x[i] - x[j]));
      c *= std::cos(kPi * (x[i] - x[j]));
      ++r;
      if (rs.family() != Family::A) {
        s *= std::sin(kPi * (x[i] + x[j]));
        c *= std::cos(kPi * (x[i] + x[j]));
        ++r;
      }
    }
  if (rs.family() == Family::B || rs.family() == Family::C) {
    const double k = rs.family() == Family::B ? 1.0 : 2.0;
    for (int i = 0; i < n; ++i) {
      s *= std::sin(k * kPi * x[i]);
      c *= std::cos(k * kPi * x[i]);
      ++r;
    }
  }
  return {std::pow(Complex(0, 2), r) * s, std::pow(2.0, r) * c};
}

FDClass fundamental_domain_orth(const RootSystem& rs, const RVec& x, double tol) {
  if (!rs.has_orthogonal_model()) throw DomainError("no orthogonal model for " + rs.label());
  const int n = static_cast<int>(x.size());
  if (n != rs.orth_dim()) throw DomainError("dimension mismatch in fundamental_domain_orth");
  // Every constraint reads g > 0.
  std::vector<double> g;
  const int chain = rs.family() == Family::D ? n - 2 : n - 1;
  for (int i = 0; i < chain; ++i) g.push_back(x[i] - x[i + 1]);
  switch (rs.family()) {
    case Family::A: g.push_back(1 - (x[0] - x[n - 1])); break;
    case Family::B:
      g.push_back(x[n - 1]);
      g.push_back(1 - x[0] - (n > 1 ? x[1] : 0));
      break;
    case Family::C:
      g.push_back(x[n - 1]);
      g.push_back(0.5 - x[0]);
      break;
    case Family::D:
      g.push_back(x[n - 2] - std::abs(x[n - 1]));
      g.push_back(1 - x[0] - x[1]);
      break;
    default: break;
  }
  bool boundary = false;
  for (double v : g) {
    if (v < -tol) return FDClass::outside;
    if (v <= tol) boundary = true;
  }
  return boundary ? FDClass::boundary : FDClass::interior;
}

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

Wide wide(const Rational& q) { return Wide(numerator(q)) / Wide(denominator(q)); }

// Sum definition of the antisymmetric function in 100-digit arithmetic.
std::pair<Wide, Wide> wide_anti(const RootSystem& rs, const QVec& lambda, const RVec& x) {
  const Wide two_pi = 2 * boost::math::constants::pi<Wide>();
  Wide re = 0, im = 0;
  for (const auto& w : weyl_group(rs)) {
    const QVec sl = mul(rs.metric_S(), act(w, lambda));
    Wide a = 0;
    for (std::size_t k = 0; k < x.size(); ++k) a += wide(sl[k]) * Wide(x[k]);
    a *= two_pi;
    re += w.det * cos(a);
    im += w.det * sin(a);
  }
  return {re, im};
}

}  // namespace

Complex character(const RootSystem& rs, const QVec& lambda, const RVec& x, double threshold) {
  check_rank(rs, lambda.size(), "character label");
  check_rank(rs, x.size(), "evaluation point");
  if (!is_dominant(lambda)) throw DomainError("characters need a dominant label");
  // The product form of phi_rho is accurate even where the sum cancels.
  const Complex den = rho_products(rs, x).anti_product;
  if (std::abs(den) < threshold)
    throw NearSingularError("|phi_rho(x)| = " + std::to_string(std::abs(den)) +
                            " is below the threshold; x is on or near a wall, perturb it or use dimension()");
  if (std::abs(den) > 1e-4) return eval(rs, OrbitKind::antisymmetric, lambda + rs.rho(), x) / den;
  // Near a wall both sums lose most of their digits in double precision.
  const auto [nr, ni] = wide_anti(rs, lambda + rs.rho(), x);
  const auto [dr, di] = wide_anti(rs, rs.rho(), x);
  const Wide dd = dr * dr + di * di;
  if (dd == 0) throw NearSingularError("phi_rho(x) vanishes exactly; x lies on a wall");
  return {static_cast<double>((nr * dr + ni * di) / dd), static_cast<double>((ni * dr - nr * di) / dd)};
}

BigInt dimension(const RootSystem& rs, const QVec& lambda) {
  check_rank(rs, lambda.size(), "dimension label");
  if (!is_dominant(lambda)) throw DomainError("dimension needs a dominant label");
  for (const auto& v : lambda)
    if (!is_integer(v)) throw DomainError("dimension needs an integral label");
  const QVec lr = lambda + rs.rho();
  Rational d = 1;
  for (const auto& a : rs.positive_roots()) d *= inner(rs, lr, a) / inner(rs, rs.rho(), a);
  if (!is_integer(d)) throw std::logic_error("Weyl dimension product is not integral: " + to_string(d));
  return numerator(d);
}

}  // namespace wof
