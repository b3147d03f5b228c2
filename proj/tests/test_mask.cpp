#include <cmath>
#include <random>

#include "doctest.h"
#include "wframe/errors.hpp"
#include "wframe/group.hpp"
#include "wframe/walsh.hpp"
#include "wframe/walsh_poly.hpp"

using wframe::Complex;
using wframe::ComplexVector;
using wframe::WalshPolynomial;

namespace {

WalshPolynomial haar_mask(int p) {
  ComplexVector b(static_cast<std::size_t>(p), Complex{0.0, 0.0});
  b[0] = {1.0, 0.0};
  return wframe::generate_mask(b, p);
}

WalshPolynomial random_mask(int p, int n, std::uint64_t seed) {
  return wframe::generate_mask(wframe::random_admissible_values(p, n, seed), p);
}

std::size_t ipow(int p, int n) {
  std::size_t v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<std::size_t>(p);
  return v;
}

}  // namespace

TEST_CASE("poly_eval basics") {
  const auto haar = haar_mask(2);
  CHECK(haar.coeffs[0] == Complex{0.5, 0.0});
  CHECK(haar.coeffs[1] == Complex{0.5, 0.0});
  CHECK(haar.eval(wframe::GroupElement::zero(2)) == Complex{1.0, 0.0});
  CHECK(haar.eval(wframe::delta(1, 2)) == Complex{0.0, 0.0});

  ComplexVector c(8, Complex{0.0, 0.0});
  c[0] = {1.0, 0.0};
  const WalshPolynomial constant(2, 3, c);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto w = wframe::coset_rep(4, rng() % 16, 2);
    CHECK(constant.eval(w) == Complex{1.0, 0.0});
  }
}

TEST_CASE("grid identity: eval at coset reps equals boundary values") {
  std::mt19937_64 rng(2024);
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      const auto m = random_mask(p, n, rng());
      const auto b = m.boundary_values();
      for (std::size_t s = 0; s < b.size(); ++s)
        CHECK(std::abs(m.eval(wframe::coset_rep(n, s, p)) - b[s]) < 1e-12);
    }
  }
}

TEST_CASE("generate_mask admissibility") {
  SUBCASE("haar") {
    const auto v = wframe::validate_mask(haar_mask(2));
    CHECK(v.is_admissible);
    CHECK(v.partition_sums.size() == 1);
    CHECK(v.partition_sums[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("p=2 n=2 frame mask") {
    ComplexVector b = {{1, 0}, {0.5, 0}, {0, 0}, {0.5, 0}};
    const auto m = wframe::generate_mask(b, 2);
    const auto v = wframe::validate_mask(m);
    CHECK(v.is_admissible);
    REQUIRE(v.partition_sums.size() == 2);
    CHECK(v.partition_sums[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v.partition_sums[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v.max_sum == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("rejections") {
    ComplexVector bad = {{1, 0}, {1, 0}};
    CHECK_THROWS_WITH_AS(wframe::generate_mask(bad, 2), doctest::Contains("partition sum"),
                         wframe::admissibility_error);
    ComplexVector not_normalized = {{0.5, 0}, {0.5, 0}};
    CHECK_THROWS_AS(wframe::generate_mask(not_normalized, 2), wframe::admissibility_error);
  }
  SUBCASE("constant mask is inadmissible") {
    ComplexVector c(4, Complex{0.0, 0.0});
    c[0] = {1.0, 0.0};
    const WalshPolynomial constant(2, 2, c);
    const auto v = wframe::validate_mask(constant);
    CHECK(!v.is_admissible);
    CHECK(v.max_sum == doctest::Approx(2.0));  // sum p at every residue
    for (double s : v.partition_sums) CHECK(s == doctest::Approx(2.0));
  }
}

TEST_CASE("validity via partition sums agrees with direct row-norm checks") {
  // sum_{l<p} |m(w + delta_l)|^2 <= 1 at every grid point iff the partition
  // sums of the boundary values are <= 1.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = (trial % 2) ? 2 : 3;
    const int n = 1 + static_cast<int>(rng() % 3);
    ComplexVector b = wframe::random_admissible_values(p, n, rng());
    if (trial % 4 == 0) b[1 % b.size()] *= 3.0;  // spoil some of them
    const auto m = wframe::generate_mask_unchecked(b, p);
    const auto v = wframe::validate_mask(m);
    double worst = 0.0;
    for (std::size_t s = 0; s < ipow(p, n); ++s) {
      const auto w = wframe::coset_rep(n, s, p);
      double sum = 0.0;
      for (int l = 0; l < p; ++l) sum += std::norm(m.eval(wframe::oplus(w, wframe::delta(l, p))));
      worst = std::max(worst, sum);
    }
    CHECK(worst == doctest::Approx(v.max_sum).epsilon(1e-10));
  }
}

TEST_CASE("polyphase components") {
  SUBCASE("haar") {
    const auto mu = wframe::polyphase_decompose(haar_mask(2));
    REQUIRE(mu.size() == 2);
    CHECK(mu[0].n == 0);
    CHECK(std::abs(mu[0].coeffs[0] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
    CHECK(std::abs(mu[1].coeffs[0] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  }
  SUBCASE("single coefficient routing") {
    ComplexVector c = {{0.0, 0.0}, {1.0, 0.0}};
    const WalshPolynomial m(2, 1, c);
    const auto mu = wframe::polyphase_decompose(m);
    CHECK(std::abs(mu[0].coeffs[0]) == 0.0);
    CHECK(std::abs(mu[1].coeffs[0] - Complex{std::sqrt(2.0), 0.0}) < 1e-15);
  }
  SUBCASE("index arithmetic p=3 n=2") {
    std::mt19937_64 rng(8);
    const auto m = random_mask(3, 2, rng());
    const auto mu = wframe::polyphase_decompose(m);
    for (int k = 0; k < 3; ++k)
      for (std::size_t a = 0; a < 3; ++a)
        CHECK(std::abs(mu[static_cast<std::size_t>(k)].coeffs[a] -
                       std::sqrt(3.0) * m.coeffs[3 * a + static_cast<std::size_t>(k)]) < 1e-15);
  }
}

TEST_CASE("polyphase recompose inverts decompose") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 5;
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto m = random_mask(p, n, rng());
    const auto back = wframe::polyphase_recompose(wframe::polyphase_decompose(m));
    REQUIRE(back.coeffs.size() == m.coeffs.size());
    for (std::size_t i = 0; i < m.coeffs.size(); ++i)
      CHECK(std::abs(back.coeffs[i] - m.coeffs[i]) < 1e-14);
  }

  // hand-checked recompositions (p = 2, constant components)
  const double r = 1.0 / std::sqrt(2.0);
  WalshPolynomial mu0(2, 0, {Complex{r, 0.0}});
  WalshPolynomial mu1(2, 0, {Complex{r, 0.0}});
  std::vector<WalshPolynomial> comps = {mu0, mu1};
  auto m = wframe::polyphase_recompose(comps);
  CHECK(std::abs(m.coeffs[0] - Complex{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(m.coeffs[1] - Complex{0.5, 0.0}) < 1e-15);
  comps[1] = WalshPolynomial(2, 0, {Complex{-r, 0.0}});
  m = wframe::polyphase_recompose(comps);
  CHECK(std::abs(m.coeffs[0] - Complex{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(m.coeffs[1] - Complex{-0.5, 0.0}) < 1e-15);
}

TEST_CASE("recompose identity m(w) = p^{-1/2} sum_s mu_s(Aw) conj(W_s(w))") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = (trial % 2) ? 2 : 3;
    const auto m = random_mask(p, 2, rng());
    const auto mu = wframe::polyphase_decompose(m);
    for (int rep = 0; rep < 5; ++rep) {
      const auto w = wframe::coset_rep(3, rng() % ipow(p, 3), p);
      const auto aw = wframe::shift(w, 1);
      Complex rhs{0.0, 0.0};
      for (int s = 0; s < p; ++s)
        rhs += mu[static_cast<std::size_t>(s)].eval(aw) *
               to_complex(wframe::phase_conj(wframe::walsh_eval(s, w)));
      rhs /= std::sqrt(static_cast<double>(p));
      CHECK(std::abs(rhs - m.eval(w)) < 1e-12);
    }
  }
}

TEST_CASE("polyphase identity over modulations") {
  // sum_k m(w + delta_k) conj(m'(w + delta_k)) = sum_k mu_k(Aw) conj(mu'_k(Aw))
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 5;
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto m1 = random_mask(p, n, rng());
    const auto m2 = random_mask(p, n, rng());
    const auto mu1 = wframe::polyphase_decompose(m1);
    const auto mu2 = wframe::polyphase_decompose(m2);
    const auto w = wframe::coset_rep(n + 1, rng() % ipow(p, n + 1), p);
    const auto aw = wframe::shift(w, 1);
    Complex lhs{0.0, 0.0}, rhs{0.0, 0.0};
    for (int k = 0; k < p; ++k) {
      const auto wk = wframe::oplus(w, wframe::delta(k, p));
      lhs += m1.eval(wk) * std::conj(m2.eval(wk));
      rhs += mu1[static_cast<std::size_t>(k)].eval(aw) *
             std::conj(mu2[static_cast<std::size_t>(k)].eval(aw));
    }
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("polyphase values depend on l only mod p^{n-1}") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = (trial % 2) ? 2 : 3;
    const int n = 2 + static_cast<int>(rng() % 2);
    const auto m = random_mask(p, n, rng());
    const auto mu = wframe::polyphase_decompose(m);
    const std::size_t stride = ipow(p, n - 1);
    for (std::size_t l = 0; l < ipow(p, n); ++l) {
      const auto pt = wframe::shift(wframe::h_of(l, p), -(n - 1));
      const auto ref = wframe::shift(wframe::h_of(l % stride, p), -(n - 1));
      for (int s = 0; s < p; ++s)
        CHECK(std::abs(mu[static_cast<std::size_t>(s)].eval(pt) -
                       mu[static_cast<std::size_t>(s)].eval(ref)) < 1e-13);
    }
  }
}

TEST_CASE("random admissible values satisfy the partition condition") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int p = (seed % 3 == 0) ? 2 : (seed % 3 == 1) ? 3 : 5;
    const int n = 1 + static_cast<int>(seed % 3);
    const auto b = wframe::random_admissible_values(p, n, seed);
    CHECK_NOTHROW(wframe::generate_mask(b, p));
  }
}
