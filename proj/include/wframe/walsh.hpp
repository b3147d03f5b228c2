#pragma once

// Characters chi(x, omega), generalized Walsh functions W_alpha, and the
// root-of-unity phase type they evaluate to. Phase arithmetic is exact
// (integer exponents mod p); conversion to a complex scalar is the only
// floating-point step.

#include <complex>
#include <cstdint>

#include "wframe/group.hpp"

namespace wframe {

// exp(2*pi*i * e / p) with e reduced mod p.
struct Phase {
  int p = 2;
  int e = 0;

  friend Phase operator*(const Phase& a, const Phase& b);
  friend bool operator==(const Phase& a, const Phase& b) { return a.p == b.p && a.e == b.e; }
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }
};

Phase phase_conj(const Phase& a);

// Exact at the quarter points (1, i, -1, -i); cos/sin otherwise. For p = 2
// every value is exactly +-1.
std::complex<double> to_complex(const Phase& a);

// chi(x, omega) = exp((2*pi*i/p) * sum_j x_j * omega_{1-j}).
Phase character(const GroupElement& x, const GroupElement& w);

// W_alpha(x) = chi(x, h_[alpha]).
Phase walsh_eval(std::uint64_t alpha, const GroupElement& x);

}  // namespace wframe
