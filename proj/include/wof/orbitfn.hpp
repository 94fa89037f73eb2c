// Symmetric and antisymmetric orbit functions, their closed forms, rho products,
// Weyl characters and the A_n generating-function identities.
#pragma once

#include "wof/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace wof {

using BigInt = boost::multiprecision::cpp_int;

enum class OrbitKind { symmetric, normalized_symmetric, antisymmetric };

// "sym", "sym-norm", "anti" (long names accepted too).
OrbitKind parse_orbit_kind(std::string_view s);
const char* to_string(OrbitKind k);

// Precomputed exponent table for one (kind, lambda); x is in omega coordinates.
class OrbitFunction {
 public:
  OrbitFunction(const RootSystem& rs, OrbitKind kind, const QVec& lambda);
  // Non-lattice labels (scaling and duality checks).
  OrbitFunction(const RootSystem& rs, OrbitKind kind, const RVec& lambda);

  Complex operator()(const RVec& x) const;
  std::size_t terms() const { return coef_.size(); }

 private:
  void add_term(const RootSystem& rs, const RVec& w_lambda, double c);

  std::vector<RVec> s_lambda_;  // S * (w lambda)
  std::vector<double> coef_;
};

Complex eval(const RootSystem& rs, OrbitKind kind, const QVec& lambda, const RVec& x);
Complex eval(const RootSystem& rs, OrbitKind kind, const RVec& lambda, const RVec& x);

// Determinant / permanent forms in orthogonal coordinates (A, B, C, D).
// m: weight in orthogonal coordinates, x: point in orthogonal coordinates (point_to_orthogonal).
// The symmetric kind divides the permanent form by the stabilizer order of m.
Complex eval_closed_form(const RootSystem& rs, OrbitKind kind, const RVec& m, const RVec& x);

struct RhoValues {
  Complex anti_sum;      // phi-anti_rho by definition
  Complex anti_product;  // (2i)^r prod sin(pi <a,x>)
  Complex sym_sum;       // phi_rho by definition
  Complex sym_product;   // 2^r prod cos(pi <a,x>)
};

RhoValues rho_products(const RootSystem& rs, const RVec& x);

// The same two products written out per family in orthogonal coordinates.
struct RhoOrth {
  Complex anti;
  Complex sym;
};
RhoOrth rho_products_orth(const RootSystem& rs, const RVec& x_orth);

// Fundamental domain written as inequalities in orthogonal coordinates.
FDClass fundamental_domain_orth(const RootSystem& rs, const RVec& x_orth, double tol = 0.0);

inline constexpr double kCharacterThreshold = 1e-12;

// phi_{lambda+rho}(x) / phi_rho(x); throws NearSingularError when |phi_rho(x)| < threshold.
Complex character(const RootSystem& rs, const QVec& lambda, const RVec& x,
                  double threshold = kCharacterThreshold);

// prod_{a>0} <lambda+rho, a> / <rho, a>, exact.
BigInt dimension(const RootSystem& rs, const QVec& lambda);

// ---- A_n identities in the variables y_j = exp(2 pi i x_j) ----

enum class AnIdentity { R1, cauchy, cha3, cha4, cha5, cha6, cha7 };

AnIdentity parse_an_identity(std::string_view s);
const char* to_string(AnIdentity id);

struct AnIdentityParams {
  std::vector<Complex> y, z;  // R1, cauchy, cha3, cha4
  Complex t = 0.5;            // cha3, cha4
  int cutoff = 12;            // series truncation: total degree |s| <= cutoff
  int s = 2, r = 3;           // cha5
  int n = 2;                  // cha6, cha7
  int m = 2;                  // cha5..cha7
};

struct AnIdentityResult {
  double residual = 0;
  Complex lhs, rhs;
  // Exact sides of the finite identities cha5..cha7.
  BigInt lhs_exact = 0, rhs_exact = 0;
  std::size_t terms = 0;
};

AnIdentityResult an_identity(AnIdentity id, const AnIdentityParams& p);

// det(y_j^{l_i}) for a strictly decreasing exponent vector l.
Complex alternant(const std::vector<long long>& l, const std::vector<Complex>& y);
// prod_{i<j} (v_i - v_j).
BigInt vandermonde(const std::vector<long long>& v);
// Partitions of total into at most parts parts, padded with zeros to length parts.
std::vector<std::vector<long long>> partitions(int total, int parts);

}  // namespace wof
