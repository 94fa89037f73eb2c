// Grids in the fundamental domain, the finite antisymmetric orbit-function transform,
// 1-D and multivariate discrete sine/cosine/exponential transforms, and quadrature
// versions of the continuous transforms.
#pragma once

#include "wof/orbitfn.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wof {

// ---- grids ----

struct GridPoint {
  std::vector<int> s;  // s_0, s_1, ..., s_n with s_0 + sum s_i m_i = M
  QVec coweight;       // s_i / M, omega-check coordinates
  QVec omega;          // the same point in omega coordinates (what eval takes)
  bool interior = false;
};

struct GridFM {
  int M = 0;
  std::vector<GridPoint> points;  // lexicographic in (s_1..s_n)
  std::vector<GridPoint> interior() const;
};

GridFM grid_FM(const RootSystem& rs, int M);

QVec coweight_to_omega(const RootSystem& rs, const QVec& c);
QVec omega_to_coweight(const RootSystem& rs, const QVec& x);
// Canonical representative modulo Q^vee: alpha-check coordinates reduced to [0,1).
QVec reduce_mod_coroot(const RootSystem& rs, const QVec& x_omega);

// W-orbits of the grid points modulo Q^vee (omega coordinates, sorted).
std::vector<QVec> Tm_expand(const RootSystem& rs, const GridFM& grid);
// (1/m) Q^vee / Q^vee, omega coordinates.
std::vector<QVec> Tm_lattice(const RootSystem& rs, int m);

// Strictly dominant labels s_1 w_1 + ... with s_0 + sum s_i k_i = M, k the dual marks.
std::vector<QVec> default_labels(const RootSystem& rs, int M);

// ---- finite orbit-function transform ----

class FinitePlan {
 public:
  // Verifies the Gram matrix over the expanded grid; throws NonInvertiblePlanError
  // naming the first offending label pair.
  static FinitePlan build(const RootSystem& rs, int M, std::vector<QVec> labels = {}, double tol = 1e-9);

  const std::vector<QVec>& labels() const { return labels_; }
  const std::vector<GridPoint>& grid() const { return grid_; }  // interior points
  std::size_t T_size() const { return t_size_; }
  std::uint64_t weyl_order() const { return w_; }
  int M() const { return M_; }
  // |T| |W|: the diagonal of the Gram matrix over T.
  double constant() const { return static_cast<double>(t_size_) * static_cast<double>(w_); }
  // Gram over T of the label functions: |W| * sum over interior grid points.
  const std::vector<std::vector<Complex>>& gram() const { return gram_; }
  double max_offdiag() const { return max_off_; }
  double max_diag_error() const { return max_diag_err_; }

  // a_lambda = (|T||W|)^{-1} <f, phi_lambda>_T, f given on the interior grid.
  std::vector<Complex> forward(const std::vector<Complex>& f) const;
  std::vector<Complex> inverse(const std::vector<Complex>& a) const;
  // Sum of a_lambda phi_lambda at an arbitrary point (omega coordinates).
  Complex synthesize(const std::vector<Complex>& a, const RVec& x) const;

 private:
  std::string diagram_;
  int M_ = 0;
  std::uint64_t w_ = 0;
  std::size_t t_size_ = 0;
  std::vector<QVec> labels_;
  std::vector<GridPoint> grid_;
  std::vector<std::vector<Complex>> matrix_;  // [label][grid point]
  std::vector<std::vector<Complex>> gram_;
  double max_off_ = 0, max_diag_err_ = 0;
  std::vector<OrbitFunction> fns_;
};

// ---- product-grid discrete transforms ----

// 1-D kinds: sine, cosine, dct1..dct4, dst1..dst4 (n must be 1).
// Multivariate kinds: anti_exp, sym_exp, anti_sine, sym_cosine, amdct1..4, smdct1..4.
struct DiscreteKind {
  enum class Base { exp, sine, cosine, dct1, dct2, dct3, dct4, dst1, dst2, dst3, dst4 } base;
  enum class Sym { plain, anti, sym } sym;

  static DiscreteKind parse(std::string_view s);
  std::string name() const;
};

class DiscretePlan {
 public:
  // N plays the role of M for the sine/cosine/exp kinds.
  static DiscretePlan build(std::string_view kind, int n, int N);

  const DiscreteKind& kind() const { return kind_; }
  int n() const { return n_; }
  int N() const { return N_; }
  const std::vector<std::vector<int>>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& grid() const { return grid_; }
  // "k1/N,k2/N" for the exp/sine/cosine kinds (reduced), "k1,k2" for DCT/DST kinds.
  std::string point_label(std::size_t i) const;
  std::string label_string(std::size_t i) const;
  const std::vector<double>& weights() const { return weights_; }    // per grid point
  const std::vector<double>& expected() const { return expected_; }  // Gram diagonal per label
  Complex kernel(std::size_t label, std::size_t point) const { return matrix_[label][point]; }
  std::vector<std::vector<Complex>> gram() const;
  // max |G - diag(expected)|
  double gram_residual() const;

  std::vector<Complex> forward(const std::vector<Complex>& f) const;
  std::vector<Complex> inverse(const std::vector<Complex>& a) const;

 private:
  DiscreteKind kind_{};
  int n_ = 1, N_ = 1;
  std::vector<std::vector<int>> labels_, grid_;
  std::vector<std::vector<Complex>> matrix_;
  std::vector<double> weights_, expected_;
};

// ---- continuous transforms by quadrature ----

struct QuadSpec {
  int points = 400;     // per axis
  double box = 1.0;     // chamber transforms: integrate omega coordinates over [0, box]^n
  double budget = 2e8;  // maximum number of integrand evaluations
};

using PointFunction = std::function<Complex(const RVec&)>;

// Volume of F in omega coordinates: 1/(n! prod q_k).
double fundamental_volume(const RootSystem& rs);

// c_lambda = (|W| vol F)^{-1} \int_F f conj(phi_lambda); normalized so phi_mu gives delta.
std::vector<Complex> series_coefficients(const RootSystem& rs, const PointFunction& f,
                                         const std::vector<QVec>& labels, const QuadSpec& q = {});

struct PlancherelReport {
  double coeff_sum = 0;  // sum |c_lambda|^2
  double norm = 0;       // (|W| vol F)^{-1} \int_F |f|^2
  double residual = 0;
};
PlancherelReport plancherel(const RootSystem& rs, const PointFunction& f, const std::vector<QVec>& labels,
                            const QuadSpec& q = {});

// \int over the dominant chamber (truncated to the box) of f(x) phi_lambda(x), omega coordinates.
Complex chamber_transform(const RootSystem& rs, const PointFunction& f, const RVec& lambda,
                          const QuadSpec& q = {});
// det(S) \int over the chamber box of g(lambda) conj(phi_lambda(x)) d lambda.
Complex chamber_inverse(const RootSystem& rs, const PointFunction& g, const RVec& x, const QuadSpec& q = {});

}  // namespace wof
