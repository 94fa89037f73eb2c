// Weyl group elements, orbits, signed orbits, dominant chamber and affine reflection.
#pragma once

#include "wof/rootsys.hpp"

#include <vector>

namespace wof {

// Acts on omega coordinates as column vectors: x -> matrix * x.
struct WeylElement {
  IMat matrix;
  int det = 1;
  std::vector<int> word;  // generator indices, leftmost applied last
};

struct DominantForm {
  QVec weight;
  int sign = 1;
  bool on_wall = false;
};

struct SignedPoint {
  QVec w;
  int sign = 1;
};

struct SignedOrbit {
  QVec dominant;
  std::vector<SignedPoint> points;  // one per group element, in group order
};

enum class FDClass { interior, boundary, outside };

const char* to_string(FDClass c);

inline constexpr std::uint64_t kDefaultGroupLimit = 200000;

std::vector<WeylElement> generators(const RootSystem& rs);
std::vector<WeylElement> generate_group(const RootSystem& rs, std::uint64_t limit = kDefaultGroupLimit);
// Process-wide cache of generate_group, keyed by diagram.
const std::vector<WeylElement>& weyl_group(const RootSystem& rs);

WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
QVec act(const WeylElement& w, const QVec& x);
RVec act(const WeylElement& w, const RVec& x);
QVec reflect(const RootSystem& rs, int i, const QVec& x);
RVec reflect(const RootSystem& rs, int i, const RVec& x);

bool is_dominant(const QVec& x);
bool is_strictly_dominant(const QVec& x);

DominantForm to_dominant(const RootSystem& rs, const QVec& x);
// Same walk, also returning the element w with w*x = weight.
DominantForm to_dominant(const RootSystem& rs, const QVec& x, WeylElement& path);

SignedOrbit signed_orbit(const RootSystem& rs, const QVec& lambda);
// Sorted lexicographically.
std::vector<QVec> orbit(const RootSystem& rs, const QVec& lambda);
std::uint64_t stabilizer_order(const RootSystem& rs, const QVec& lambda);

QVec affine_r0(const RootSystem& rs, const QVec& x);
RVec affine_r0(const RootSystem& rs, const RVec& x);
QVec reflect_highest(const RootSystem& rs, const QVec& x);

FDClass in_fundamental_domain(const RootSystem& rs, const QVec& x);
FDClass in_fundamental_domain(const RootSystem& rs, const RVec& x, double tol = 0.0);

// Weyl groups in orthogonal coordinates: (w m)_i = sign[i] * m[perm[i]].
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  int det = 1;
};

// A: permutations of dim coordinates; B/C: all signed permutations; D: even sign changes.
std::vector<SignedPerm> orth_group(Family f, int dim);
int permutation_parity(const std::vector<int>& perm);

template <class V>
V act(const SignedPerm& w, const V& m) {
  V out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[w.perm[i]] * w.sign[i];
  return out;
}

}  // namespace wof
