// AVX2+FMA variant of the radix-p passes. This translation unit is compiled
// with -mavx2 -mfma on x86-64; callers must gate on avx2_available().

#include <stdexcept>
#include <vector>

#include "kernel_common.hpp"
#include "wframe/kernels.hpp"
#include "wframe/parallel.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define WFRAME_X86 1
#else
#define WFRAME_X86 0
#endif

#if WFRAME_X86
#include <immintrin.h>
#endif

namespace wframe::kernels {

bool avx2_available() {
#if WFRAME_X86
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if WFRAME_X86

namespace {

using detail::ipow;

// (v * c) for two packed complex doubles; c broadcast as (re, im).
inline __m256d cmul(__m256d v, __m256d cre, __m256d cim) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(v, cre, _mm256_mul_pd(swapped, cim));
}

// Radix-2, adjacent pairs: (x[2g], x[2g+1]) -> (sum, difference).
void stage2_stride1(Complex* x, std::size_t total) {
  parallel_for_ranges(0, total / 2, 1u << 12, [=](std::size_t g0, std::size_t g1) {
    double* d = reinterpret_cast<double*>(x);
    for (std::size_t g = g0; g < g1; ++g) {
      const __m256d v = _mm256_loadu_pd(d + 4 * g);
      const __m256d swap = _mm256_permute2f128_pd(v, v, 0x01);
      const __m256d res = _mm256_blend_pd(_mm256_add_pd(v, swap), _mm256_sub_pd(swap, v), 0b1100);
      _mm256_storeu_pd(d + 4 * g, res);
    }
  });
}

void stage2_strided(Complex* x, std::size_t total, std::size_t stride) {
  const std::size_t span = stride * 2;
  parallel_for_ranges(0, total / span, (1u << 13) / span + 1, [=](std::size_t g0, std::size_t g1) {
    for (std::size_t g = g0; g < g1; ++g) {
      double* a = reinterpret_cast<double*>(x + g * span);
      double* b = reinterpret_cast<double*>(x + g * span + stride);
      std::size_t off = 0;
      for (; off + 2 <= stride; off += 2) {
        const __m256d u = _mm256_loadu_pd(a + 2 * off);
        const __m256d v = _mm256_loadu_pd(b + 2 * off);
        _mm256_storeu_pd(a + 2 * off, _mm256_add_pd(u, v));
        _mm256_storeu_pd(b + 2 * off, _mm256_sub_pd(u, v));
      }
      for (; off < stride; ++off) {
        const __m128d u = _mm_loadu_pd(a + 2 * off);
        const __m128d v = _mm_loadu_pd(b + 2 * off);
        _mm_storeu_pd(a + 2 * off, _mm_add_pd(u, v));
        _mm_storeu_pd(b + 2 * off, _mm_sub_pd(u, v));
      }
    }
  });
}

constexpr std::size_t kMaxSimdRadix = 16;

// General radix: two butterflies (2 complex lanes) per iteration across the
// stride run; scalar tail for odd strides and the stride-1 pass.
void stagep_strided(Complex* x, std::size_t total, std::size_t stride, int p,
                    const std::vector<Complex>& roots) {
  const std::size_t up = static_cast<std::size_t>(p);
  const std::size_t span = stride * up;
  __m256d cre[kMaxSimdRadix], cim[kMaxSimdRadix];
  for (std::size_t m = 0; m < up; ++m) {
    cre[m] = _mm256_set1_pd(roots[m].real());
    cim[m] = _mm256_set1_pd(roots[m].imag());
  }
  parallel_for_ranges(0, total / span, (1u << 13) / span + 1,
                      [&, x](std::size_t g0, std::size_t g1) {
    __m256d y[kMaxSimdRadix];
    std::vector<Complex> ys(up);
    for (std::size_t g = g0; g < g1; ++g) {
      Complex* base = x + g * span;
      std::size_t off = 0;
      for (; off + 2 <= stride; off += 2) {
        double* cell = reinterpret_cast<double*>(base + off);
        for (std::size_t d = 0; d < up; ++d) y[d] = _mm256_loadu_pd(cell + 2 * d * stride);
        for (std::size_t k = 0; k < up; ++k) {
          __m256d acc = y[0];
          std::size_t m = 0;
          for (std::size_t d = 1; d < up; ++d) {
            m += k;
            if (m >= up) m -= up;
            if (m == 0)
              acc = _mm256_add_pd(acc, y[d]);
            else
              acc = _mm256_add_pd(acc, cmul(y[d], cre[m], cim[m]));
          }
          _mm256_storeu_pd(cell + 2 * k * stride, acc);
        }
      }
      for (; off < stride; ++off) {
        for (std::size_t d = 0; d < up; ++d) ys[d] = base[off + d * stride];
        for (std::size_t k = 0; k < up; ++k) {
          Complex acc = ys[0];
          std::size_t m = 0;
          for (std::size_t d = 1; d < up; ++d) {
            m += k;
            if (m >= up) m -= up;
            acc += roots[m] * ys[d];
          }
          base[off + k * stride] = acc;
        }
      }
    }
  });
}

}  // namespace

void stages_avx2(Complex* x, int p, int n, int sign) {
  if (static_cast<std::size_t>(p) > kMaxSimdRadix) {
    stages_scalar(x, p, n, sign);
    return;
  }
  const std::size_t total = ipow(p, n);
  const auto roots = detail::root_table(p, sign);
  std::size_t stride = 1;
  for (int t = 0; t < n; ++t, stride *= static_cast<std::size_t>(p)) {
    if (p == 2) {
      if (stride == 1)
        stage2_stride1(x, total);
      else
        stage2_strided(x, total, stride);
    } else {
      stagep_strided(x, total, stride, p, roots);
    }
  }
}

#else  // !WFRAME_X86

void stages_avx2(Complex*, int, int, int) {
  throw std::runtime_error("AVX2 backend not available on this architecture");
}

#endif

}  // namespace wframe::kernels
