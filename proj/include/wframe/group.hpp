#pragma once

// Exact arithmetic on the Vilenkin group G_p: canonical finitely supported
// digit sequences, the group operation and inverse, the dilation automorphism,
// the lambda map, the non-Archimedean norm, and the distinguished elements
// h_[alpha], delta_l, and coset representatives.
//
// Digit index convention: digit x_j has weight p^{-j} under lambda, so
// negative indices carry the integer part and positive indices the
// fractional part. Elements are immutable after construction; every
// operation below is pure.

#include <cstdint>
#include <utility>
#include <vector>

#include "wframe/rational.hpp"

namespace wframe {

class GroupElement {
 public:
  // (index, digit) pairs, strictly increasing index, digits in [1, p-1].
  using Digits = std::vector<std::pair<int, int>>;

  explicit GroupElement(int base) : base_(base) { check_base(base); }

  // Canonicalizes: reduces digits mod p, drops zeros, sorts by index.
  static GroupElement from_digits(int base, Digits digits);

  static GroupElement zero(int base) { return GroupElement(base); }

  int base() const { return base_; }
  const Digits& digits() const { return digits_; }
  bool is_zero() const { return digits_.empty(); }

  // k(x) = min{j : x_j != 0}; only defined for x != theta.
  int leading_index() const;

  int digit_at(int j) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.base_ == b.base_ && a.digits_ == b.digits_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

 private:
  static void check_base(int base);
  int base_;
  Digits digits_;
};

// Digitwise addition mod p. Throws std::invalid_argument on base mismatch.
GroupElement oplus(const GroupElement& x, const GroupElement& y);

// Inverse element: each digit d maps to p - d.
GroupElement ominus(const GroupElement& x);

// x ominus y.
GroupElement osub(const GroupElement& x, const GroupElement& y);

// A^k: (A^k x)_j = x_{j+k}. shift(x, 1) doubles lambda for p = 2.
GroupElement shift(const GroupElement& x, int k);

// lambda(x) = sum_j x_j p^{-j}, exact.
Rational lambda_value(const GroupElement& x);

// ||x|| = p^{-k(x)}, ||theta|| = 0, exact.
Rational norm(const GroupElement& x);

// The element of H with lambda = alpha (base-p digits of alpha at indices
// 0, -1, -2, ...).
GroupElement h_of(std::uint64_t alpha, int p);

// delta_l = A^{-1} h_[l]: single digit l at index 1, lambda = l/p.
GroupElement delta(int l, int p);

// A^{-n} h_[s]: representative of the coset U_{n,s}; lambda = s / p^n.
// Requires 0 <= s < p^n.
GroupElement coset_rep(int n, std::uint64_t s, int p);

// lambda(x) for x in H, as an integer. Throws if x has digits at positive
// indices.
std::uint64_t lambda_h(const GroupElement& x);

}  // namespace wframe
