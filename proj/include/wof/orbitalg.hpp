// Products of (signed) orbits and branching of signed orbits to subgroups.
#pragma once

#include "wof/orbitfn.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace wof {

enum class OrbitType { plain, signed_orbit };

struct OrbitTerm {
  long long coeff = 0;
  QVec label;  // dominant, omega coordinates
  OrbitType type = OrbitType::plain;
  bool operator==(const OrbitTerm&) const = default;
};

// Terms sorted lexicographically by label; labels distinct, coefficients nonzero.
struct OrbitSum {
  std::vector<OrbitTerm> terms;

  long long coeff(const QVec& label) const;
  bool operator==(const OrbitSum&) const = default;
};

std::string to_string(const OrbitSum& s);
nlohmann::json to_json(const OrbitSum& s);

// O(lambda) (x) O^±(mu) by the coset shortcut: one term |w lambda + mu| per orbit point.
OrbitSum product_plain_signed(const RootSystem& rs, const QVec& lambda, const QVec& mu);
// Same product by expanding all |O(lambda)|*|W| signed points.
OrbitSum product_plain_signed_bruteforce(const RootSystem& rs, const QVec& lambda, const QVec& mu);
// O^±(lambda) (x) O^±(mu): plain orbits, wall labels included.
OrbitSum product_signed_signed(const RootSystem& rs, const QVec& lambda, const QVec& mu);
OrbitSum product_plain_plain(const RootSystem& rs, const QVec& lambda, const QVec& mu);

// f_lambda * g_mu as a sum of orbit functions; plain terms stand for phi, signed for the
// antisymmetric functions. Kinds: sym, sym-norm or anti for either factor.
OrbitSum expand_function_product(const RootSystem& rs, OrbitKind a, const QVec& lambda, OrbitKind b,
                                 const QVec& mu);
Complex evaluate(const RootSystem& rs, const OrbitSum& s, const RVec& x);

// ---- branching ----

struct BranchBlock {
  Family family;
  int dim;  // orthogonal coordinates in the block
};

struct BranchRule {
  enum class Kind { drop, split } kind = Kind::drop;
  int p = 0;  // split: size of the leading A block

  // "drop" or "split:p" ("drop-last"/"drop-first" are accepted as aliases of drop).
  static BranchRule parse(std::string_view s);
  std::string label() const;
};

struct BranchTerm {
  long long coeff = 0;
  std::vector<QVec> blocks;  // orthogonal coordinates per target block
  bool operator==(const BranchTerm&) const = default;
};

struct BranchResult {
  std::vector<BranchBlock> target;
  std::vector<int> kept;  // source coordinates feeding the target blocks, in order
  std::vector<BranchTerm> terms;
  std::uint64_t source_points = 0;  // |W|
  std::uint64_t cancelled = 0;      // points whose contributions cancel under restriction
};

// m: strictly dominant source weight in orthogonal coordinates.
BranchResult branch(const RootSystem& rs, const BranchRule& rule, const QVec& m);

// The restricted point: source orthogonal coordinates with the dropped ones set to 0.
RVec branch_embed(const RootSystem& rs, const BranchResult& r, const RVec& x_target);
// Sum of the target antisymmetric functions at x (concatenated target coordinates).
Complex evaluate(const BranchResult& r, const RVec& x_target);
// Antisymmetric orbit function of one block in orthogonal coordinates.
Complex anti_block(Family f, const RVec& m, const RVec& x);

std::string to_string(const BranchResult& r);
nlohmann::json to_json(const BranchResult& r);

}  // namespace wof
