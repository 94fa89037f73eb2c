// One-dimensional kernels shared by the 1-D and product-grid plans.
#pragma once

#include "wof/transforms.hpp"

#include <functional>

namespace wof::detail {

struct Kernel1D {
  int N = 1;
  int r_lo = 0, r_hi = 0, k_lo = 0, k_hi = 0;  // inclusive label and grid index ranges
  std::function<Complex(int, int)> value;      // kernel(r, k)
  std::function<double(int)> weight;           // c_k
  std::function<double(int)> norm;             // 1-D Gram diagonal at r
  bool fraction_grid = false;                  // grid points are k/N
};

Kernel1D kernel_1d(DiscreteKind::Base b, int N);

}  // namespace wof::detail
