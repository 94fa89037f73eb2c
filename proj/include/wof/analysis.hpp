// Differential and shift-operator eigenproperties of antisymmetric orbit functions,
// Hermite eigenfunctions of the (anti)symmetric transforms, and (anti)symmetrized
// families of 1-D orthogonal polynomials.
#pragma once

#include "wof/orbitfn.hpp"

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wof {

// 2nd-order central differences.
struct FDStencil {
  double h = 1e-4;
  bool mixed = true;  // allow products of second differences (sigma_2)
};

// ---- Laplacian ----

// Random interior point of F (omega coordinates), at least `margin` from every wall in theta,
// with |phi_lambda(x)| >= min_abs so relative errors stay meaningful.
RVec sample_interior(const RootSystem& rs, std::mt19937_64& rng, const QVec& lambda, double margin = 0.02,
                     double min_abs = 0.1);

struct EigenCheck {
  Complex fd_value;     // finite-difference operator applied to phi_lambda at x
  Complex eigen_value;  // predicted eigenvalue times phi_lambda(x)
  double rel_err = 0;
};

// phi_lambda as a function of orthogonal coordinates (R^{n+1} for A_n).
Complex eval_orthogonal(const RootSystem& rs, const RVec& m, const RVec& y);

// Sum of second differences in orthogonal coordinates vs -4 pi^2 |m|^2 phi.
// lambda is in the omega basis and must be strictly dominant; x (omega coordinates)
// must be interior to F with room for the stencil.
EigenCheck laplace_check(const RootSystem& rs, const QVec& lambda, const RVec& x, double h = 1e-4);

// sigma_k(d^2/dy_1^2, ..., d^2/dy_r^2) vs (-4 pi^2)^k sigma_k(m_1^2, ..., m_r^2); k = 1, 2.
EigenCheck sigma_k_check(const RootSystem& rs, const QVec& lambda, const RVec& x, int k, double h = 1e-3);

struct OmegaOperator {
  // Coefficients c_ij of sum c_ij d_i d_j in theta (omega coordinates).
  std::vector<std::vector<double>> quarter;      // (1/2) <a_i,a_i>^{-1} M_ij = S^{-1}/4
  std::vector<std::vector<double>> metric_dual;  // S^{-1}: the Laplacian itself
};
OmegaOperator omega_basis_operator(const RootSystem& rs);

// sum (S^{-1})_ij d_i d_j phi by differences in theta vs -4 pi^2 <lambda,lambda> phi.
// The S^{-1} entries raise the theta frequencies, hence the smaller default step.
EigenCheck omega_laplace_check(const RootSystem& rs, const QVec& lambda, const RVec& x, double h = 1e-5);

// ---- shift operators ----
// (D_y f)(x) = sum_w det(w) f(wx + y),  (D^_y f)(x) = sum_w f(wx + y).

enum class ShiftVariant { D, D_hat, D_on_sym };
ShiftVariant parse_shift_variant(std::string_view s);
const char* to_string(ShiftVariant v);

struct ShiftCheck {
  Complex lhs;           // operator applied to the orbit function, summed directly
  Complex rhs_stated;    // eigenvalue times the input function
  Complex rhs_expanded;  // what the double Weyl sum collapses to
  double rel_err_stated = 0;
  double rel_err = 0;    // against rhs_expanded
};

// D:        D_y phi-anti_lambda  = phi_lambda(y) phi-anti_lambda(x)       (stated = expanded)
// D_hat:    D^_y phi-anti_lambda = phi-anti_lambda(y) phi^_lambda(x)      (stated: ... phi-anti_lambda(x))
// D_on_sym: D_y phi_lambda       = phi-anti_lambda(y) phi-anti_lambda(x)  (stated: ... phi_lambda(x))
// phi^ is the full W-sum (= phi for strictly dominant lambda). x, y in omega coordinates.
ShiftCheck shift_operator_check(const RootSystem& rs, const QVec& lambda, const RVec& x, const RVec& y,
                                ShiftVariant v);

// max_i |sum_w (d phi / d y_i)(w y)| over orthogonal coordinates, central differences,
// divided by max_i sum_w |(d phi / d y_i)(w y)|.
double derivative_identity_residual(const RootSystem& rs, const QVec& lambda, const RVec& x, double h = 1e-4);

// ---- Hermite ----

double hermite(int n, double x);           // three-term recurrence
double hermite_explicit(int n, double x);  // factorial sum, small n only

using MultiIndex = std::vector<int>;

enum class SymVariant { sym, anti };
SymVariant parse_sym_variant(std::string_view s);

// anti: det(H_{m_i}(x_j)); sym: sum over all of S_n of prod H_{(wm)_i}(x_i).
double hermite_sym_anti(const MultiIndex& m, const RVec& x, SymVariant v);

// e^{-pi|x|^2} H^{v}_m(sqrt(2 pi) x).
double hermite_function(const MultiIndex& m, const RVec& x, SymVariant v);

// The transform f -> (1/n!) \int phi_lambda(x) f(x) dx (phi the A_{n-1} orbit function in
// orthogonal coordinates, full S_n sum for sym) on a midpoint grid over [-box, box]^2.
class HermiteGridTransform {
 public:
  HermiteGridTransform(SymVariant v, int points = 400, double box = 6.0);

  int points() const { return p_; }
  double node(int j) const { return t_[j]; }
  // Values f(node(i), node(j)) at index i * points + j.
  std::vector<Complex> sample(const std::function<Complex(double, double)>& f) const;
  std::vector<Complex> apply(const std::vector<Complex>& f) const;

 private:
  SymVariant v_;
  int p_;
  std::vector<double> t_;
  std::vector<Complex> kernel_;  // h * e^{2 pi i t_j t_k}
};

struct HermiteEigenCheck {
  Complex eigenvalue;  // i^{|m|}
  double rel_err = 0;  // max |T f - eigenvalue f| / max |f| over the grid
};
HermiteEigenCheck transform_eigen_check(const MultiIndex& m, SymVariant v, int points = 400, double box = 6.0);

// max |T^4 f - f| / max |f| for a grid function f.
double fourth_power_residual(const HermiteGridTransform& t, const std::vector<Complex>& f);

// ---- (anti)symmetrized 1-D polynomial families ----

struct PolyFamily {
  std::string name;
  // Monomial coefficients of p_k, lowest degree first.
  std::function<std::vector<double>(int)> coefficients;
  // Orthogonality weight density (1 when none applies).
  std::function<double(double)> weight;
};

PolyFamily monomial_family();
PolyFamily hermite_family();             // physicists' H_k, weight e^{-x^2}
PolyFamily orthonormal_hermite_family();  // H_k / sqrt(2^k k! sqrt(pi)), weight e^{-x^2}
PolyFamily family_by_name(std::string_view s);

double poly_eval(const std::vector<double>& c, double x);

// Sum over distinct arrangements of m (the S_n / S_m cosets).
double p_sym(const PolyFamily& f, const MultiIndex& m, const RVec& x);
// det(p_{m_i}(x_j)).
double p_anti(const PolyFamily& f, const MultiIndex& m, const RVec& x);
// p_anti / prod_{i<j} (x_i - x_j), through divided differences, so coincident x are fine.
double P_anti(const PolyFamily& f, const MultiIndex& m, const RVec& x);

// \int over x_1 >= ... >= x_n of p^v_m p^v_m' prod weight(x_i), midpoint rule on [-box, box]^n.
double ordered_inner_product(const PolyFamily& f, const MultiIndex& m, const MultiIndex& mp, SymVariant v,
                             int points = 400, double box = 8.0);

}  // namespace wof
