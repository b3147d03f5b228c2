#include "wframe/walsh_poly.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "wframe/errors.hpp"
#include "wframe/walsh.hpp"

namespace wframe {

namespace {

std::size_t ipow(int p, int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<std::size_t>(p);
  return v;
}

}  // namespace

WalshPolynomial::WalshPolynomial(int p_, int n_, ComplexVector c)
    : p(p_), n(n_), coeffs(std::move(c)) {
  if (p < 2) throw std::invalid_argument("WalshPolynomial: p must be >= 2");
  if (n < 0) throw std::invalid_argument("WalshPolynomial: n must be >= 0");
  if (coeffs.size() != ipow(p, n))
    throw std::invalid_argument("WalshPolynomial: expected " + std::to_string(ipow(p, n)) +
                                " coefficients, got " + std::to_string(coeffs.size()));
}

Complex WalshPolynomial::eval(const GroupElement& w) const {
  if (w.base() != p) throw std::invalid_argument("WalshPolynomial::eval: base mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t alpha = 0; alpha < coeffs.size(); ++alpha)
    acc += coeffs[alpha] * to_complex(phase_conj(walsh_eval(alpha, w)));
  return acc;
}

ComplexVector WalshPolynomial::boundary_values(Backend backend) const {
  return vc_inverse(coeffs, p, backend);
}

namespace {

MaskValidity validity_from_boundary(const ComplexVector& b, int p, int n, double tol) {
  MaskValidity v;
  v.tol = tol;
  v.is_walsh_normalized = std::abs(b[0] - Complex{1.0, 0.0}) <= tol;
  const std::size_t stride = ipow(p, n - 1);
  v.partition_sums.resize(stride);
  for (std::size_t l = 0; l < stride; ++l) {
    double sum = 0.0;
    for (int i = 0; i < p; ++i) sum += std::norm(b[l + static_cast<std::size_t>(i) * stride]);
    v.partition_sums[l] = sum;
    v.max_sum = std::max(v.max_sum, sum);
  }
  v.is_admissible = v.is_walsh_normalized && v.max_sum <= 1.0 + tol;
  return v;
}

}  // namespace

MaskValidity validate_mask(const WalshPolynomial& m, double tol) {
  if (m.n < 1) throw std::invalid_argument("validate_mask: mask must have order exponent >= 1");
  return validity_from_boundary(m.boundary_values(), m.p, m.n, tol);
}

WalshPolynomial generate_mask(std::span<const Complex> b, int p, double tol) {
  const int n = order_exponent(b.size(), p);
  if (n < 1) throw std::invalid_argument("generate_mask: need at least p values");
  ComplexVector bv(b.begin(), b.end());
  const MaskValidity v = validity_from_boundary(bv, p, n, tol);
  if (!v.is_walsh_normalized)
    throw admissibility_error("generate_mask: boundary value b_0 must equal 1, got (" +
                              std::to_string(b[0].real()) + ", " + std::to_string(b[0].imag()) +
                              ")");
  if (v.max_sum > 1.0 + tol) {
    std::size_t worst = 0;
    for (std::size_t l = 0; l < v.partition_sums.size(); ++l)
      if (v.partition_sums[l] == v.max_sum) {
        worst = l;
        break;
      }
    throw admissibility_error("generate_mask: partition sum " + std::to_string(v.max_sum) +
                              " > 1 at residue l = " + std::to_string(worst));
  }
  return WalshPolynomial(p, n, vc_forward(bv, p));
}

WalshPolynomial generate_mask_unchecked(std::span<const Complex> b, int p) {
  const int n = order_exponent(b.size(), p);
  ComplexVector bv(b.begin(), b.end());
  return WalshPolynomial(p, n, vc_forward(bv, p));
}

std::vector<WalshPolynomial> polyphase_decompose(const WalshPolynomial& m) {
  if (m.n < 1) throw std::invalid_argument("polyphase_decompose: order exponent must be >= 1");
  const double scale = std::sqrt(static_cast<double>(m.p));
  const std::size_t sub = ipow(m.p, m.n - 1);
  std::vector<WalshPolynomial> mu;
  mu.reserve(static_cast<std::size_t>(m.p));
  for (int k = 0; k < m.p; ++k) {
    ComplexVector c(sub);
    for (std::size_t alpha = 0; alpha < sub; ++alpha)
      c[alpha] =
          scale * m.coeffs[alpha * static_cast<std::size_t>(m.p) + static_cast<std::size_t>(k)];
    mu.emplace_back(m.p, m.n - 1, std::move(c));
  }
  return mu;
}

WalshPolynomial polyphase_recompose(std::span<const WalshPolynomial> mu) {
  if (mu.empty()) throw std::invalid_argument("polyphase_recompose: no components");
  const int p = mu[0].p;
  const int nsub = mu[0].n;
  if (static_cast<int>(mu.size()) != p)
    throw std::invalid_argument("polyphase_recompose: expected p components");
  for (const auto& c : mu)
    if (c.p != p || c.n != nsub)
      throw std::invalid_argument("polyphase_recompose: mismatched component shapes");
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  const std::size_t sub = ipow(p, nsub);
  ComplexVector out(sub * static_cast<std::size_t>(p));
  for (std::size_t alpha = 0; alpha < sub; ++alpha)
    for (int k = 0; k < p; ++k)
      out[alpha * static_cast<std::size_t>(p) + static_cast<std::size_t>(k)] =
          scale * mu[static_cast<std::size_t>(k)].coeffs[alpha];
  return WalshPolynomial(p, nsub + 1, std::move(out));
}

ComplexVector random_admissible_values(int p, int n, std::uint64_t seed) {
  if (p < 2 || n < 1) throw std::invalid_argument("random_admissible_values: need p >= 2, n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t stride = ipow(p, n - 1);
  ComplexVector b(stride * static_cast<std::size_t>(p), Complex{0.0, 0.0});
  b[0] = {1.0, 0.0};
  // Partition 0 already carries full mass through b_0; each free partition
  // splits a uniform mass across its p slots with random phases.
  for (std::size_t l = 1; l < stride; ++l) {
    const double mass = unit(rng);
    std::vector<double> w(static_cast<std::size_t>(p));
    double wsum = 0.0;
    for (auto& x : w) {
      x = unit(rng);
      wsum += x;
    }
    for (int i = 0; i < p; ++i) {
      const double share = wsum > 0.0 ? mass * w[static_cast<std::size_t>(i)] / wsum : 0.0;
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      b[l + static_cast<std::size_t>(i) * stride] =
          std::sqrt(share) * Complex{std::cos(phi), std::sin(phi)};
    }
  }
  return b;
}

}  // namespace wframe
