#include <doctest.h>

#include <chrono>
#include <cmath>
#include <vector>

#include "brokenstick/error.hpp"
#include "brokenstick/exact_core.hpp"
#include "support/oracles.hpp"

using namespace brokenstick;
using namespace brokenstick::exact;

namespace {

ExactRational frac(long num, long den) { return ExactRational(BigInt(num), BigInt(den)); }

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) {
    out.emplace_back(v);
  }
  return out;
}

} // namespace

TEST_CASE("beta vectors for small cases") {
  CHECK(beta_forward(3, 3).betas == ints({4, 2, 1}));
  CHECK(beta_forward(3, 4).betas == ints({7, 4, 2, 1}));
  CHECK(beta_forward(4, 4).betas == ints({6, 4, 2, 1}));
  CHECK(beta_backward(3, 3).betas == ints({4, 2, 1}));
  CHECK(beta_backward(3, 4).betas == ints({7, 4, 2, 1}));
  CHECK(beta_backward(4, 4).betas == ints({6, 4, 2, 1}));

  const BetaVector b = beta_backward(5, 9);
  CHECK(b.k == 5);
  CHECK(b.n == 9);
  CHECK(b.at(9) == 1);
}

TEST_CASE("sliding-window recursions match the literal vector recursion") {
  for (int n = 3; n <= 40; ++n) {
    for (int k = 3; k <= n; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      const auto expected = oracles::naive_betas(k, n);
      REQUIRE(beta_forward(k, n).betas == expected);
      REQUIRE(beta_backward(k, n).betas == expected);
    }
  }
}

TEST_CASE("forward and backward agree up to n = 100, last weight 1, strictly decreasing") {
  for (int n = 3; n <= 100; ++n) {
    for (int k = 3; k <= n; ++k) {
      const BetaVector fwd = beta_forward(k, n);
      const BetaVector bwd = beta_backward(k, n);
      REQUIRE(fwd == bwd);
      REQUIRE(bwd.at(n) == 1);
      for (int j = 1; j < n; ++j) {
        REQUIRE(bwd.at(j) > bwd.at(j + 1));
      }
    }
  }
}

TEST_CASE("domain is 3 <= k <= n") {
  CHECK_THROWS_AS(beta_forward(2, 5), InvalidDomain);
  CHECK_THROWS_AS(beta_backward(6, 5), InvalidDomain);
  CHECK_THROWS_AS(prob_none_exact(3, 2), InvalidDomain);
  CHECK_THROWS_AS(prob_none_float(2, 2), InvalidDomain);
  CHECK_THROWS_AS(prob_not_all_exact(5, 4), InvalidDomain);
  CHECK_THROWS_AS(prob_all_exact(2, 4), InvalidDomain);
  CHECK_THROWS_AS(prob_random_subset(4, 3), InvalidDomain);
  CHECK_THROWS_AS(expected_bad_subsets(1, 3), InvalidDomain);
  CHECK_THROWS_AS(TermCoefficients(2, 3), InvalidDomain);
}

TEST_CASE("probability that no k-subset forms") {
  CHECK(prob_none_exact(3, 3) == frac(3, 4));
  CHECK(prob_none_exact(5, 5) == frac(5, 16));
  CHECK(prob_none_exact(3, 4) == frac(3, 7));
  CHECK(prob_none_exact(4, 4) == frac(1, 2));
}

TEST_CASE("log-domain evaluation") {
  const auto small = prob_none_float(3, 3);
  CHECK(small.probability == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(small.log_probability == doctest::Approx(-0.2876820724517809).epsilon(1e-14));

  const auto big = prob_none_float(196, 200);
  CHECK(std::isfinite(big.log_probability));
  const double exact_log = prob_none_exact(196, 200).log();
  CHECK(std::abs(big.log_probability - exact_log) / std::abs(exact_log) <= 1e-9);
}

TEST_CASE("log-domain evaluation matches exact values up to n = 300") {
  for (int n = 3; n <= 300; ++n) {
    for (int k = 3; k <= n; ++k) {
      const auto fp = prob_none_float(k, n);
      const ExactRational exact = prob_none_exact(k, n);
      const double as_double = exact.to_double();
      double rel = 0.0;
      if (as_double > 1e-300) {
        rel = std::abs(fp.probability - as_double) / as_double;
      } else {
        rel = std::abs(std::expm1(fp.log_probability - exact.log()));
      }
      if (!(rel <= 1e-9)) {
        FAIL("k=" << k << " n=" << n << " rel=" << rel);
      }
    }
  }
}

TEST_CASE("term coefficients") {
  const TermCoefficients t(5, 9);
  for (int j = 0; j <= 9 - 5; ++j) {
    CHECK(t.c(4, j) == 9 - 5 + 2);
  }
  CHECK(t.c(1, 0) == 2 * 3 + 6);
  CHECK(t.lambda(0, 1) == ExactRational(7));
  CHECK(t.lambda(2, 4) == frac(9, 2));
  CHECK_THROWS_AS(t.c(0, 0), InvalidDomain);
  CHECK_THROWS_AS(t.lambda(3, 1), InvalidDomain);

  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= n; ++k) {
      const TermCoefficients tc(k, n);
      for (int j = 0; j <= n - k; ++j) {
        REQUIRE(tc.c(k - 1, j) == n - k + 2);
        for (int r = 1; r <= k - 1; ++r) {
          REQUIRE(tc.c(r, j) > 0);
        }
      }
      // prod_r lambda(r,1) = n!/(n-k+2)!
      REQUIRE(tc.lambda_product(1) == ExactRational(factorial(static_cast<unsigned>(n)),
                                                    factorial(static_cast<unsigned>(n - k + 2))));
      for (int j = 2; j <= n - k + 2; ++j) {
        BigInt j_pow;
        mpz_ui_pow_ui(j_pow.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k - 2));
        REQUIRE(tc.lambda_product(j) == ExactRational(tc.c_product(j - 2), j_pow));
        for (int r = 0; r <= k - 3; ++r) {
          REQUIRE(tc.lambda(r, j).sign() > 0);
        }
      }
    }
  }
}

TEST_CASE("probability that at least one k-subset fails") {
  CHECK(prob_not_all_exact(3, 3) == frac(3, 4));
  CHECK(prob_not_all_exact(6, 6) == frac(3, 16));
  CHECK(prob_not_all_exact(3, 4) == frac(14, 15));
}

TEST_CASE("not-all probability matches the exponential-spacings oracle") {
  for (int n = 3; n <= 20; ++n) {
    for (int k = 3; k <= n; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(prob_not_all_exact(k, n) == oracles::not_all_via_spacings(k, n));
    }
  }
}

TEST_CASE("probability that every k-subset forms") {
  CHECK(prob_all_exact(3, 3) == frac(1, 4));
  CHECK(prob_all_exact(3, 4) == frac(1, 15));
  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= n; ++k) {
      const ExactRational q = prob_all_exact(k, n);
      const ExactRational q_bar = prob_not_all_exact(k, n);
      REQUIRE(q + q_bar == ExactRational(1));
      REQUIRE(prob_none_exact(k, n) <= q_bar);
      REQUIRE(q.in_unit_interval());
      REQUIRE(q_bar.in_unit_interval());
      REQUIRE(prob_none_exact(k, n).in_unit_interval());
    }
  }
}

TEST_CASE("full-size case reduces to n/2^(n-1)") {
  for (int n = 3; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(prob_none_exact(n, n) == closed_form_full(n));
    CHECK(prob_not_all_exact(n, n) == closed_form_full(n));
  }
}

TEST_CASE("random k-subset failure probability does not depend on n") {
  CHECK(prob_random_subset(3, 10) == frac(3, 4));
  CHECK(prob_random_subset(4, 100) == frac(1, 2));
  CHECK(prob_random_subset(5, 5) == frac(5, 16));
  for (int k = 3; k <= 12; ++k) {
    const ExactRational first = prob_random_subset(k, k);
    for (int n = k; n <= 30; ++n) {
      REQUIRE(prob_random_subset(k, n) == first);
    }
  }
}

TEST_CASE("expected number of failing subsets") {
  CHECK(expected_bad_subsets(3, 4) == ExactRational(3));
  CHECK(expected_bad_subsets(3, 3) == frac(3, 4));
  CHECK(expected_bad_subsets(4, 6) == frac(15, 2));
  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= n; ++k) {
      const ExactRational e = expected_bad_subsets(k, n);
      REQUIRE(e.sign() >= 0);
      REQUIRE(e <= ExactRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))));
    }
  }
}

TEST_CASE("large instance is fast") {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  (void)prob_none_exact(196, 200);
  CHECK(std::chrono::duration<double>(Clock::now() - t0).count() < 2.0);
}
