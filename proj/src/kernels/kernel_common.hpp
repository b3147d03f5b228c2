#pragma once

// Shared between the scalar and SIMD stage kernels.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace wframe::kernels::detail {

inline std::size_t ipow(int p, int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<std::size_t>(p);
  return v;
}

// p-th roots of unity exp(sign * 2*pi*i*m/p); quarter points kept exact so
// that the p = 2 path is pure add/sub arithmetic.
inline std::vector<std::complex<double>> root_table(int p, int sign) {
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(p));
  for (int m = 0; m < p; ++m) {
    if (m == 0) {
      roots[m] = {1.0, 0.0};
    } else if (2 * m == p) {
      roots[m] = {-1.0, 0.0};
    } else if (4 * m == p) {
      roots[m] = {0.0, sign > 0 ? 1.0 : -1.0};
    } else if (4 * m == 3 * p) {
      roots[m] = {0.0, sign > 0 ? -1.0 : 1.0};
    } else {
      const double t =
          2.0 * std::numbers::pi * static_cast<double>(sign * m) / static_cast<double>(p);
      roots[m] = {std::cos(t), std::sin(t)};
    }
  }
  return roots;
}

}  // namespace wframe::kernels::detail
