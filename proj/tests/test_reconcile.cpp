#include <doctest.h>

#include <vector>

#include "brokenstick/error.hpp"
#include "brokenstick/exact_core.hpp"
#include "brokenstick/reconcile.hpp"

using namespace brokenstick;
using namespace brokenstick::reconcile;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) {
    out.emplace_back(v);
  }
  return out;
}

std::vector<BigInt> slice(const std::vector<BigInt> &v, size_t from) {
  return {v.begin() + static_cast<long>(from), v.end()};
}

} // namespace

TEST_CASE("sequences for k = 3, n = 4") {
  const ReconcileSequences s = build_sequences(3, 4);
  CHECK(s.F == ints({0, 1, 1, 2, 3}));
  CHECK(s.f == ints({0, 1, 2, 4, 7}));
  CHECK(slice(s.xi, 1) == ints({1, 2, 4, 7}));
  CHECK(s.xi[0] == 0);
  CHECK(s.g.empty());
  CHECK(s.h.empty());
  CHECK(s.mu.empty());
}

TEST_CASE("k = 3 gives the Fibonacci numbers and no h/mu products") {
  const ReconcileSequences s = build_sequences(3, 30);
  CHECK(s.F[1] == 1);
  CHECK(s.F[2] == 1);
  for (int u = 3; u <= 30; ++u) {
    REQUIRE(s.F[static_cast<size_t>(u)] == s.F[static_cast<size_t>(u - 1)] + s.F[static_cast<size_t>(u - 2)]);
  }
  CHECK(s.F[30] == 832040);
  CHECK(s.h.empty());
  CHECK(check_simplified_recursions(s).passed());
}

TEST_CASE("sequence definitions hold term by term") {
  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= n; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      const ReconcileSequences s = build_sequences(k, n);
      REQUIRE(s.F.size() == static_cast<size_t>(n + 1));
      for (int u = 0; u <= k - 3; ++u) {
        REQUIRE(s.F[static_cast<size_t>(u)] == 0);
        REQUIRE(s.xi[static_cast<size_t>(u)] == 0);
      }
      REQUIRE(s.F[static_cast<size_t>(k - 2)] == 1);
      REQUIRE(s.xi[static_cast<size_t>(k - 2)] == 1);

      BigInt prefix = 0;
      for (int u = 0; u <= n; ++u) {
        if (u >= k - 1) {
          BigInt sum = 0;
          for (int r = 1; r <= k - 1; ++r) {
            sum += s.F[static_cast<size_t>(u - r)];
          }
          REQUIRE(s.F[static_cast<size_t>(u)] == sum);
        }
        REQUIRE(s.F[static_cast<size_t>(u)] >= 0);
        prefix += s.F[static_cast<size_t>(u)];
        REQUIRE(s.f[static_cast<size_t>(u)] == prefix); // f(j) = F_0 + ... + F_j
        if (u > 0) {
          REQUIRE(s.f[static_cast<size_t>(u)] >= s.f[static_cast<size_t>(u - 1)]);
        }
        if (u >= k - 2) {
          REQUIRE(s.f[static_cast<size_t>(u)] >= 1);
        }
      }

      // g and h straight from their defining sums
      for (int u = 2; u <= k - 2; ++u) {
        BigInt g = 1;
        for (int r = 2; r <= u; ++r) {
          g += s.f[static_cast<size_t>(n - r)];
        }
        REQUIRE(s.g_at(u) == g);
      }
      for (int j = 2; j <= k - 2; ++j) {
        BigInt h = s.f[static_cast<size_t>(n)];
        for (int r = 2; r <= j; ++r) {
          h += s.g_at(k - r);
        }
        REQUIRE(s.h_at(j) == h);
      }

      const auto beta = exact::beta_backward(k, n);
      for (int j = 2; j <= k - 2; ++j) {
        REQUIRE(s.mu_at(j) == beta.at(k - 1 - j));
      }
    }
  }
}

TEST_CASE("simplified recursions") {
  const ReconcileSequences s34 = build_sequences(3, 4);
  CHECK(s34.f[3] == 1 + s34.f[2] + s34.f[1]);
  CHECK(check_simplified_recursions(s34).passed());

  const Report r58 = check_simplified_recursions(build_sequences(5, 8));
  CHECK(r58.passed());
  CHECK(r58.checks > 0);

  SUBCASE("a corrupted f is reported at its index") {
    ReconcileSequences bad = build_sequences(5, 8);
    bad.f[6] += 1;
    const Report r = check_simplified_recursions(bad);
    REQUIRE_FALSE(r.passed());
    CHECK(r.first_failure()->identity == "f_simplified_recursion");
    CHECK(r.first_failure()->index == 6);
  }
  SUBCASE("a corrupted h is reported") {
    ReconcileSequences bad = build_sequences(7, 9);
    bad.h[1] += 1; // h(3)
    const Report r = check_simplified_recursions(bad);
    REQUIRE_FALSE(r.passed());
    CHECK(r.first_failure()->identity == "h_simplified_recursion");
    CHECK(r.first_failure()->index == 3);
  }
}

TEST_CASE("Fibonacci-form probability") {
  CHECK(prob_none_verreault(3, 3) == ExactRational(BigInt(3), BigInt(4)));
  CHECK(prob_none_verreault(3, 4) == ExactRational(BigInt(3), BigInt(7)));
  CHECK_THROWS_AS(prob_none_verreault(2, 4), InvalidDomain);
  for (int n = 3; n <= 50; ++n) {
    for (int k = 3; k <= n; ++k) {
      REQUIRE(prob_none_verreault(k, n) == exact::prob_none_exact(k, n));
    }
  }
}

TEST_CASE("reconcile report") {
  const Report r312 = reconcile_report(3, 12);
  CHECK(r312.passed());

  const Report r77 = reconcile_report(7, 7);
  CHECK(r77.passed());
  CHECK(build_sequences(7, 7).mu.size() == 4);

  const ReconcileSequences s33 = build_sequences(3, 3);
  CHECK(slice(s33.xi, 1) == ints({1, 2, 4}));
  CHECK(slice(s33.f, 1) == ints({1, 2, 4}));

  for (int n = 3; n <= 50; ++n) {
    for (int k = 3; k <= n; ++k) {
      const Report r = reconcile_report(k, n);
      if (!r.passed()) {
        FAIL("k=" << k << " n=" << n << " " << r.first_failure()->identity);
      }
    }
  }
}

TEST_CASE("corrupted weights are caught") {
  exact::BetaVector beta = exact::beta_backward(6, 10);
  beta.betas[8] += 1; // beta_9 = xi_{n+k-2-9} = xi_5
  const Report r = reconcile_report(beta);
  REQUIRE_FALSE(r.passed());
  CHECK(r.first_failure()->identity == "xi_equals_f");
  CHECK(r.first_failure()->index == 5);
  bool product_flagged = false;
  for (const auto &f : r.failures) {
    product_flagged |= f.identity == "verreault_equals_beta_form";
  }
  CHECK(product_flagged);

  exact::BetaVector mu_side = exact::beta_backward(6, 10);
  mu_side.betas[0] += 1; // beta_1 = mu_{k-2}
  const Report r2 = reconcile_report(mu_side);
  REQUIRE_FALSE(r2.passed());
  CHECK(r2.first_failure()->identity == "mu_equals_h");
  CHECK(r2.first_failure()->index == 4);
}
