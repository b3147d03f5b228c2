#pragma once

// Discrete Vilenkin-Chrestenson transform of size p^n.
//
// Forward:  a_alpha = p^{-n} * sum_s b_s W_alpha(A^{-n} h_[s])
// Inverse:  b_s     = sum_alpha a_alpha conj(W_alpha(A^{-n} h_[s]))
//
// The fast path runs n radix-p butterfly passes plus a digit reversal
// (O(n p^{n+1})); the naive path evaluates the kernel through the group
// primitives (O(p^{2n})) and serves as the test oracle.

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace wframe {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

enum class Backend { Auto, Scalar, Avx2 };

// Auto resolves to Avx2 when the CPU supports it. Requesting Avx2 on an
// unsupported host throws std::invalid_argument.
Backend resolve_backend(Backend b);
std::string backend_name(Backend b);

// n such that p^n == len; throws std::invalid_argument otherwise.
int order_exponent(std::size_t len, int p);

ComplexVector vc_forward(std::span<const Complex> b, int p, Backend backend = Backend::Auto);
ComplexVector vc_inverse(std::span<const Complex> a, int p, Backend backend = Backend::Auto);

// Kernel evaluated through vgroup/walsh primitives; the oracle.
ComplexVector vc_forward_naive(std::span<const Complex> b, int p);
ComplexVector vc_inverse_naive(std::span<const Complex> a, int p);

}  // namespace wframe
