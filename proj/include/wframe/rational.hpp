#pragma once

// Small exact rational type used for lambda values and norms.
// Numerators and denominators stay well inside int64 for every grid point,
// coset representative, and H element the library manipulates; arithmetic
// that would overflow throws instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wframe {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0, gcd(num, den) == 1

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return from_wide(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || -n > lim || d > lim) throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }
};

// p^e as an exact rational (e may be negative); throws on int64 overflow.
inline Rational rational_pow(int p, int e) {
  std::int64_t v = 1;
  const int a = e < 0 ? -e : e;
  for (int i = 0; i < a; ++i) {
    if (v > INT64_MAX / p) throw std::overflow_error("rational_pow: overflow");
    v *= p;
  }
  return e >= 0 ? Rational(v, 1) : Rational(1, v);
}

}  // namespace wframe
