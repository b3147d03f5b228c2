#include "wframe/walsh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wframe {

Phase operator*(const Phase& a, const Phase& b) {
  if (a.p != b.p) throw std::invalid_argument("Phase: base mismatch");
  return Phase{a.p, (a.e + b.e) % a.p};
}

Phase phase_conj(const Phase& a) { return Phase{a.p, a.e == 0 ? 0 : a.p - a.e}; }

std::complex<double> to_complex(const Phase& a) {
  if (a.e == 0) return {1.0, 0.0};
  if (2 * a.e == a.p) return {-1.0, 0.0};
  if (4 * a.e == a.p) return {0.0, 1.0};
  if (4 * a.e == 3 * a.p) return {0.0, -1.0};
  const double t = 2.0 * std::numbers::pi * static_cast<double>(a.e) / static_cast<double>(a.p);
  return {std::cos(t), std::sin(t)};
}

Phase character(const GroupElement& x, const GroupElement& w) {
  if (x.base() != w.base()) throw std::invalid_argument("character: base mismatch");
  const int p = x.base();
  long long e = 0;
  // The pairing couples x_j with omega_{1-j}; iterate over the sparser
  // support and look the partner digit up.
  if (x.digits().size() <= w.digits().size()) {
    for (const auto& [j, d] : x.digits()) e += static_cast<long long>(d) * w.digit_at(1 - j);
  } else {
    for (const auto& [j, d] : w.digits()) e += static_cast<long long>(d) * x.digit_at(1 - j);
  }
  return Phase{p, static_cast<int>(e % p)};
}

Phase walsh_eval(std::uint64_t alpha, const GroupElement& x) {
  // chi(x, h_[alpha]) without materializing h_[alpha]: digit i of alpha
  // sits at index -i, pairing with x_{1+i}.
  const int p = x.base();
  long long e = 0;
  int i = 0;
  while (alpha != 0) {
    const int d = static_cast<int>(alpha % static_cast<std::uint64_t>(p));
    if (d != 0) e += static_cast<long long>(d) * x.digit_at(1 + i);
    alpha /= static_cast<std::uint64_t>(p);
    ++i;
  }
  return Phase{p, static_cast<int>(e % p)};
}

}  // namespace wframe
