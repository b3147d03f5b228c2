#pragma once

// Butterfly kernels behind the fast Vilenkin-Chrestenson transform.
//
// The size-p^n kernel W_alpha(A^{-n} h_[s]) factors into n radix-p passes
// (one per digit position) followed by a digit-reversal permutation; the
// passes carry no twiddle factors beyond the p-th roots of unity. Two
// implementations share this stage structure: a scalar reference and an
// AVX2 variant selected at runtime. Equivalence of the two is part of the
// test suite.

#include <complex>
#include <cstddef>

namespace wframe::kernels {

using Complex = std::complex<double>;

// True when the host CPU can run the AVX2+FMA variant.
bool avx2_available();

// Applies all n radix-p passes in place. sign = +1 uses roots
// exp(+2*pi*i*k*d/p), sign = -1 the conjugates. Length of x is p^n.
void stages_scalar(Complex* x, int p, int n, int sign);
void stages_avx2(Complex* x, int p, int n, int sign);

// In-place base-p digit reversal of the index space (an involution).
void digit_reverse(Complex* x, int p, int n);

}  // namespace wframe::kernels
