#include "wframe/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wframe {

void GroupElement::check_base(int base) {
  if (base < 2) throw std::invalid_argument("GroupElement: base must be >= 2");
}

GroupElement GroupElement::from_digits(int base, Digits digits) {
  check_base(base);
  GroupElement x(base);
  std::sort(digits.begin(), digits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i + 1 < digits.size() && digits[i].first == digits[i + 1].first)
      throw std::invalid_argument("GroupElement: duplicate digit index");
    int d = digits[i].second % base;
    if (d < 0) d += base;
    if (d != 0) x.digits_.emplace_back(digits[i].first, d);
  }
  return x;
}

int GroupElement::leading_index() const {
  if (digits_.empty()) throw std::invalid_argument("leading_index: zero element");
  return digits_.front().first;
}

int GroupElement::digit_at(int j) const {
  auto it = std::lower_bound(digits_.begin(), digits_.end(), j,
                             [](const auto& a, int v) { return a.first < v; });
  return (it != digits_.end() && it->first == j) ? it->second : 0;
}

namespace {
void require_same_base(const GroupElement& x, const GroupElement& y, const char* op) {
  if (x.base() != y.base())
    throw std::invalid_argument(std::string(op) + ": base mismatch (" +
                                std::to_string(x.base()) + " vs " + std::to_string(y.base()) + ")");
}
}  // namespace

GroupElement oplus(const GroupElement& x, const GroupElement& y) {
  require_same_base(x, y, "oplus");
  const int p = x.base();
  GroupElement z(p);
  GroupElement::Digits out;
  out.reserve(x.digits().size() + y.digits().size());
  auto a = x.digits().begin(), ae = x.digits().end();
  auto b = y.digits().begin(), be = y.digits().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.push_back(*b++);
    } else {
      const int d = (a->second + b->second) % p;
      if (d != 0) out.emplace_back(a->first, d);
      ++a;
      ++b;
    }
  }
  return GroupElement::from_digits(p, std::move(out));
}

GroupElement ominus(const GroupElement& x) {
  const int p = x.base();
  GroupElement::Digits out;
  out.reserve(x.digits().size());
  for (const auto& [j, d] : x.digits()) out.emplace_back(j, p - d);
  return GroupElement::from_digits(p, std::move(out));
}

GroupElement osub(const GroupElement& x, const GroupElement& y) { return oplus(x, ominus(y)); }

GroupElement shift(const GroupElement& x, int k) {
  GroupElement::Digits out;
  out.reserve(x.digits().size());
  for (const auto& [j, d] : x.digits()) out.emplace_back(j - k, d);
  return GroupElement::from_digits(x.base(), std::move(out));
}

Rational lambda_value(const GroupElement& x) {
  Rational sum(0);
  for (const auto& [j, d] : x.digits())
    sum = sum + Rational(d) * rational_pow(x.base(), -j);
  return sum;
}

Rational norm(const GroupElement& x) {
  if (x.is_zero()) return Rational(0);
  return rational_pow(x.base(), -x.leading_index());
}

GroupElement h_of(std::uint64_t alpha, int p) {
  GroupElement::Digits out;
  int index = 0;
  while (alpha != 0) {
    const int d = static_cast<int>(alpha % static_cast<std::uint64_t>(p));
    if (d != 0) out.emplace_back(index, d);
    alpha /= static_cast<std::uint64_t>(p);
    --index;
  }
  return GroupElement::from_digits(p, std::move(out));
}

GroupElement delta(int l, int p) {
  if (l < 0 || l >= p) throw std::invalid_argument("delta: l must be in [0, p)");
  return shift(h_of(static_cast<std::uint64_t>(l), p), -1);
}

GroupElement coset_rep(int n, std::uint64_t s, int p) {
  if (n < 0) throw std::invalid_argument("coset_rep: n must be >= 0");
  std::uint64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= static_cast<std::uint64_t>(p);
  if (s >= pn)
    throw std::invalid_argument("coset_rep: s = " + std::to_string(s) + " out of range [0, p^n)");
  return shift(h_of(s, p), -n);
}

std::uint64_t lambda_h(const GroupElement& x) {
  // Horner over indices ascending (most negative index carries the highest
  // power of p); trailing zero digits down to index 0 still scale the value.
  std::uint64_t value = 0;
  int prev = 0;
  bool any = false;
  for (const auto& [j, d] : x.digits()) {
    if (j > 0) throw std::invalid_argument("lambda_h: element not in H");
    if (any)
      for (int i = prev; i < j; ++i) value *= static_cast<std::uint64_t>(x.base());
    value += static_cast<std::uint64_t>(d);
    prev = j;
    any = true;
  }
  if (any)
    for (int i = prev; i < 0; ++i) value *= static_cast<std::uint64_t>(x.base());
  return value;
}

}  // namespace wframe
