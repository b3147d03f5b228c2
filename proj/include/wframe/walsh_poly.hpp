#pragma once

// Walsh polynomials m(w) = sum_alpha a_alpha conj(W_alpha(w)) of order
// p^n - 1, the objects serving as scaling and wavelet masks. Coefficients
// are the canonical representation; the boundary values b_s = m(A^{-n}h_[s])
// are derived on demand through the inverse VC transform.

#include <cstdint>
#include <vector>

#include "wframe/group.hpp"
#include "wframe/transform.hpp"

namespace wframe {

struct WalshPolynomial {
  int p = 2;
  int n = 0;             // order exponent; p^n coefficients
  ComplexVector coeffs;  // a_0 .. a_{p^n - 1}

  WalshPolynomial() = default;
  WalshPolynomial(int p_, int n_, ComplexVector c);

  // Evaluation at an arbitrary group element (exact phase arithmetic).
  Complex eval(const GroupElement& w) const;

  // Values on the grid A^{-n} h_[s], s = 0..p^n-1 (one inverse transform).
  ComplexVector boundary_values(Backend backend = Backend::Auto) const;
};

// Admissibility data for a scaling mask: b_0 = 1 and, for every residue l,
// sum_i |b_{l + i p^{n-1}}|^2 <= 1.
struct MaskValidity {
  bool is_walsh_normalized = false;     // b_0 == 1 (within tolerance)
  std::vector<double> partition_sums;   // p^{n-1} values
  double max_sum = 0.0;
  bool is_admissible = false;
  double tol = 1e-12;
};

MaskValidity validate_mask(const WalshPolynomial& m, double tol = 1e-12);

// Builds a scaling mask from boundary values b (length p^n); validates the
// admissibility conditions first and throws admissibility_error with the
// violating partition otherwise.
WalshPolynomial generate_mask(std::span<const Complex> b, int p, double tol = 1e-12);

// As generate_mask but skips validation (negative-test construction path).
WalshPolynomial generate_mask_unchecked(std::span<const Complex> b, int p);

// The p sub-polynomials mu_k of order exponent n-1 with coefficients
// sqrt(p) * a_{p*alpha + k}.
std::vector<WalshPolynomial> polyphase_decompose(const WalshPolynomial& m);

// Exact inverse of polyphase_decompose:
// m(w) = p^{-1/2} sum_s mu_s(A w) conj(W_s(w)).
WalshPolynomial polyphase_recompose(std::span<const WalshPolynomial> mu);

// Draws admissible boundary values: b_0 = 1, the rest of partition 0 zero,
// and each other partition's mass uniform in [0,1], split with random phases.
ComplexVector random_admissible_values(int p, int n, std::uint64_t seed);

}  // namespace wframe
