#include <vector>

#include "kernel_common.hpp"
#include "wframe/kernels.hpp"
#include "wframe/parallel.hpp"

namespace wframe::kernels {

namespace {

using detail::ipow;

void stage_radix2(Complex* x, std::size_t total, std::size_t stride) {
  const std::size_t span = stride * 2;
  parallel_for_ranges(0, total / span, (1u << 13) / span + 1, [=](std::size_t g0, std::size_t g1) {
    for (std::size_t g = g0; g < g1; ++g) {
      Complex* a = x + g * span;
      Complex* b = a + stride;
      for (std::size_t off = 0; off < stride; ++off) {
        const Complex u = a[off];
        const Complex v = b[off];
        a[off] = u + v;
        b[off] = u - v;
      }
    }
  });
}

void stage_radix_p(Complex* x, std::size_t total, std::size_t stride, int p,
                   const std::vector<Complex>& roots) {
  const std::size_t up = static_cast<std::size_t>(p);
  const std::size_t span = stride * up;
  parallel_for_ranges(0, total / span, (1u << 13) / span + 1,
                      [&, x](std::size_t g0, std::size_t g1) {
    std::vector<Complex> y(up);
    for (std::size_t g = g0; g < g1; ++g) {
      Complex* base = x + g * span;
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t d = 0; d < up; ++d) y[d] = base[off + d * stride];
        for (std::size_t k = 0; k < up; ++k) {
          Complex acc = y[0];
          std::size_t m = 0;
          for (std::size_t d = 1; d < up; ++d) {
            m += k;
            if (m >= up) m -= up;
            acc += roots[m] * y[d];
          }
          base[off + k * stride] = acc;
        }
      }
    }
  });
}

}  // namespace

void stages_scalar(Complex* x, int p, int n, int sign) {
  const std::size_t total = ipow(p, n);
  const auto roots = detail::root_table(p, sign);
  std::size_t stride = 1;
  for (int t = 0; t < n; ++t, stride *= static_cast<std::size_t>(p)) {
    if (p == 2)
      stage_radix2(x, total, stride);
    else
      stage_radix_p(x, total, stride, p, roots);
  }
}

void digit_reverse(Complex* x, int p, int n) {
  const std::size_t total = ipow(p, n);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rev = 0;
    std::size_t v = i;
    for (int t = 0; t < n; ++t) {
      rev = rev * static_cast<std::size_t>(p) + v % static_cast<std::size_t>(p);
      v /= static_cast<std::size_t>(p);
    }
    if (rev > i) std::swap(x[i], x[rev]);
  }
}

}  // namespace wframe::kernels
