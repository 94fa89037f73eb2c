// Static data of a connected root system and coordinate conversions.
#pragma once

#include "wof/core.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace wof {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct DiagramId {
  Family family;
  int rank;

  // "A2", "c3", "G2"...
  static DiagramId parse(std::string_view label);
  std::string label() const;
  bool operator==(const DiagramId&) const = default;
};

enum class Basis { omega, alpha, alpha_check };

Basis parse_basis(std::string_view s);

// Immutable once built; copies are cheap enough to pass around by const&.
class RootSystem {
 public:
  explicit RootSystem(DiagramId id);
  static RootSystem build(std::string_view label) { return RootSystem(DiagramId::parse(label)); }

  const DiagramId& id() const { return id_; }
  Family family() const { return id_.family; }
  int rank() const { return id_.rank; }
  std::string label() const { return id_.label(); }

  const IMat& cartan() const { return cartan_; }
  const QMat& cartan_inv() const { return cartan_inv_; }
  const QVec& root_norms() const { return norms_; }
  // S = M^{-1} D, D = diag(<a_i,a_i>/2); <x,y> = x S y^T in the omega basis.
  const QMat& metric_S() const { return S_; }
  const QMat& metric_S_inv() const { return S_inv_; }
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  // Coefficients of the highest short coroot in the simple coroots (marks of the dual system).
  const std::vector<int>& dual_marks() const { return dual_marks_; }
  QVec rho() const { return QVec(id_.rank, Rational(1)); }
  std::uint64_t weyl_order() const { return weyl_order_; }

  // Highest root xi in omega coordinates; xi^vee = xi as vectors.
  const QVec& highest_root() const { return highest_; }

  // Positive roots: alpha-basis integer coefficients and omega coordinates, sorted by height.
  const std::vector<IVec>& positive_roots_alpha() const { return pos_alpha_; }
  const std::vector<QVec>& positive_roots() const { return pos_omega_; }

  // Row-major double copy of S, for evaluation loops.
  const RVec& metric_S_double() const { return S_d_; }

  bool has_orthogonal_model() const;
  bool group_enumerable() const;
  // Dimension of the orthogonal model: n+1 for A_n, n otherwise.
  int orth_dim() const;
  // Points use x_orth = orth_scale * (weight map); 1/2 for C_n, 1 otherwise.
  double orth_scale() const;

 private:
  DiagramId id_;
  IMat cartan_;
  QMat cartan_inv_;
  QVec norms_;
  QMat S_, S_inv_;
  std::vector<int> marks_, comarks_, dual_marks_;
  std::uint64_t weyl_order_ = 0;
  QVec highest_;
  std::vector<IVec> pos_alpha_;
  std::vector<QVec> pos_omega_;
  RVec S_d_;
};

Rational inner(const RootSystem& rs, const QVec& x, const QVec& y);
double inner(const RootSystem& rs, const RVec& x, const RVec& y);
// S y, so that <x,y> = dot(x, metric_apply(y)).
RVec metric_apply(const RootSystem& rs, const RVec& y);

QVec convert_basis(const RootSystem& rs, const QVec& v, Basis from, Basis to);

// Weights. For A_n the result has n+1 entries summing to (n+1)*offset.
QVec to_orthogonal(const RootSystem& rs, const QVec& lambda, const Rational& offset = 0);
QVec from_orthogonal(const RootSystem& rs, const QVec& m);
RVec to_orthogonal(const RootSystem& rs, const RVec& lambda);
RVec from_orthogonal(const RootSystem& rs, const RVec& m);

// Points x (omega coordinates theta) in orthogonal coordinates, scaled so that
// dot(to_orthogonal(lambda), point_to_orthogonal(x)) = <lambda, x>.
RVec point_to_orthogonal(const RootSystem& rs, const RVec& theta);
RVec point_from_orthogonal(const RootSystem& rs, const RVec& x);

nlohmann::json to_json(const RootSystem& rs);

}  // namespace wof
