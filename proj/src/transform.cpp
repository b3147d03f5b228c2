#include "wframe/transform.hpp"

#include <stdexcept>

#include "wframe/kernels.hpp"
#include "wframe/walsh.hpp"

namespace wframe {

Backend resolve_backend(Backend b) {
  switch (b) {
    case Backend::Auto:
      return kernels::avx2_available() ? Backend::Avx2 : Backend::Scalar;
    case Backend::Avx2:
      if (!kernels::avx2_available())
        throw std::invalid_argument("backend avx2 not supported on this host");
      return b;
    case Backend::Scalar:
      return b;
  }
  return Backend::Scalar;
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Auto:
      return "auto";
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

int order_exponent(std::size_t len, int p) {
  if (p < 2) throw std::invalid_argument("order_exponent: p must be >= 2");
  if (len == 0) throw std::invalid_argument("order_exponent: empty vector");
  int n = 0;
  std::size_t v = len;
  while (v % static_cast<std::size_t>(p) == 0) {
    v /= static_cast<std::size_t>(p);
    ++n;
  }
  if (v != 1)
    throw std::invalid_argument("length " + std::to_string(len) + " is not a power of p = " +
                                std::to_string(p));
  return n;
}

namespace {

void run_stages(Complex* x, int p, int n, int sign, Backend backend) {
  if (resolve_backend(backend) == Backend::Avx2)
    kernels::stages_avx2(x, p, n, sign);
  else
    kernels::stages_scalar(x, p, n, sign);
}

}  // namespace

ComplexVector vc_forward(std::span<const Complex> b, int p, Backend backend) {
  const int n = order_exponent(b.size(), p);
  ComplexVector a(b.begin(), b.end());
  run_stages(a.data(), p, n, +1, backend);
  kernels::digit_reverse(a.data(), p, n);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale /= static_cast<double>(p);
  for (auto& v : a) v *= scale;
  return a;
}

ComplexVector vc_inverse(std::span<const Complex> a, int p, Backend backend) {
  const int n = order_exponent(a.size(), p);
  ComplexVector b(a.begin(), a.end());
  run_stages(b.data(), p, n, -1, backend);
  kernels::digit_reverse(b.data(), p, n);
  return b;
}

ComplexVector vc_forward_naive(std::span<const Complex> b, int p) {
  const int n = order_exponent(b.size(), p);
  const std::size_t total = b.size();
  std::vector<GroupElement> grid;
  grid.reserve(total);
  for (std::size_t s = 0; s < total; ++s) grid.push_back(coset_rep(n, s, p));
  ComplexVector a(total);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale /= static_cast<double>(p);
  for (std::size_t alpha = 0; alpha < total; ++alpha) {
    Complex acc{0.0, 0.0};
    for (std::size_t s = 0; s < total; ++s)
      acc += b[s] * to_complex(walsh_eval(alpha, grid[s]));
    a[alpha] = acc * scale;
  }
  return a;
}

ComplexVector vc_inverse_naive(std::span<const Complex> a, int p) {
  const int n = order_exponent(a.size(), p);
  const std::size_t total = a.size();
  std::vector<GroupElement> grid;
  grid.reserve(total);
  for (std::size_t s = 0; s < total; ++s) grid.push_back(coset_rep(n, s, p));
  ComplexVector b(total);
  for (std::size_t s = 0; s < total; ++s) {
    Complex acc{0.0, 0.0};
    for (std::size_t alpha = 0; alpha < total; ++alpha)
      acc += a[alpha] * to_complex(phase_conj(walsh_eval(alpha, grid[s])));
    b[s] = acc;
  }
  return b;
}

}  // namespace wframe
