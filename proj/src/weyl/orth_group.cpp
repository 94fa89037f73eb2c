#include "wof/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace wof {

int permutation_parity(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int parity = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

std::vector<SignedPerm> orth_group(Family f, int dim) {
  if (f != Family::A && f != Family::B && f != Family::C && f != Family::D)
    throw DomainError("no orthogonal model for this family");
  if (dim < 1 || dim > 9) throw SizeLimitError("orthogonal group dimension out of range");
  std::vector<SignedPerm> out;
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int sp = permutation_parity(perm);
    if (f == Family::A) {
      out.push_back({perm, std::vector<int>(dim, 1), sp});
      continue;
    }
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      const int flips = __builtin_popcount(mask);
      if (f == Family::D && flips % 2) continue;
      std::vector<int> sign(dim, 1);
      for (int i = 0; i < dim; ++i)
        if (mask & (1u << i)) sign[i] = -1;
      out.push_back({perm, sign, (flips % 2 ? -sp : sp)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace wof
