#include "brokenstick/exact_core.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "brokenstick/error.hpp"

namespace brokenstick::exact {

namespace {

using BigVector = std::vector<BigInt>;

void add_into(BigVector &acc, const BigVector &v) {
  for (size_t i = 0; i < acc.size(); ++i) {
    acc[i] += v[i];
  }
}

void sub_into(BigVector &acc, const BigVector &v) {
  for (size_t i = 0; i < acc.size(); ++i) {
    acc[i] -= v[i];
  }
}

} // namespace

TermCoefficients::TermCoefficients(int k, int n) : k_(k), n_(n) {
  require_polygon_domain(k, n);
  const int cols_c = n - k + 1;
  c_.resize(static_cast<size_t>(k - 1) * cols_c);
  for (int r = 1; r <= k - 1; ++r) {
    for (int j = 0; j <= n - k; ++j) {
      c_[static_cast<size_t>(r - 1) * cols_c + j] =
          static_cast<std::int64_t>(j + 2) * (k - 1 - r) + (n - k + 2);
    }
  }
  const int cols_l = n - k + 2;
  lambda_.reserve(static_cast<size_t>(k - 2) * cols_l);
  for (int r = 0; r <= k - 3; ++r) {
    for (int j = 1; j <= n - k + 2; ++j) {
      lambda_.push_back(ExactRational(r + 1) + ExactRational(BigInt(n - k + 2), BigInt(j)));
    }
  }
}

std::int64_t TermCoefficients::c(int r, int j) const {
  if (r < 1 || r > k_ - 1 || j < 0 || j > n_ - k_) {
    throw InvalidDomain("c index out of range");
  }
  return c_[static_cast<size_t>(r - 1) * (n_ - k_ + 1) + j];
}

const ExactRational &TermCoefficients::lambda(int r, int j) const {
  if (r < 0 || r > k_ - 3 || j < 1 || j > n_ - k_ + 2) {
    throw InvalidDomain("lambda index out of range");
  }
  return lambda_[static_cast<size_t>(r) * (n_ - k_ + 2) + (j - 1)];
}

BigInt TermCoefficients::c_product(int j) const {
  BigInt p = 1;
  for (int r = 1; r <= k_ - 2; ++r) {
    p *= static_cast<long>(c(r, j));
  }
  return p;
}

ExactRational TermCoefficients::lambda_product(int j) const {
  ExactRational p(1);
  for (int r = 0; r <= k_ - 3; ++r) {
    p *= lambda(r, j);
  }
  return p;
}

BetaVector beta_forward(int k, int n) {
  require_polygon_domain(k, n);
  const auto size = static_cast<size_t>(n);

  BigVector total(size, 0);
  BigVector window(size, 0); // sum of the last k-1 vectors b
  std::deque<BigVector> recent;

  for (int r = 1; r <= n; ++r) {
    BigVector b;
    if (r == 1) {
      b.assign(size, 0);
    } else if (r < k) {
      b = recent.back();
    } else {
      b = window;
    }
    b[static_cast<size_t>(r - 1)] += 1;

    add_into(total, b);
    add_into(window, b);
    recent.push_back(std::move(b));
    if (static_cast<int>(recent.size()) > k - 1) {
      sub_into(window, recent.front());
      recent.pop_front();
    }
  }
  return BetaVector{k, n, std::move(total)};
}

BetaVector beta_backward(int k, int n) {
  require_polygon_domain(k, n);
  // beta[r] for r = 1..n+k-2; the tail past n stays zero.
  std::vector<BigInt> beta(static_cast<size_t>(n + k - 1), 0);
  beta[static_cast<size_t>(n)] = 1;

  // window = sum_{r=j+1}^{j+k-1} beta_r, starting at j = n-1
  BigInt window = beta[static_cast<size_t>(n)];
  for (int j = n - 1; j >= k - 2 && j >= 1; --j) {
    beta[static_cast<size_t>(j)] = 1 + window;
    window += beta[static_cast<size_t>(j)];
    window -= beta[static_cast<size_t>(j + k - 1)];
  }

  if (k >= 4) {
    // tail = sum_{r=k}^{j+k-1} beta_r, starting at j = k-3
    BigInt tail = 0;
    for (int r = k; r <= 2 * k - 4; ++r) {
      tail += beta[static_cast<size_t>(r)];
    }
    for (int j = k - 3; j >= 1; --j) {
      beta[static_cast<size_t>(j)] = 1 + beta[static_cast<size_t>(j + 1)] + tail;
      tail -= beta[static_cast<size_t>(j + k - 1)];
    }
  }

  BetaVector out{k, n, {}};
  out.betas.assign(beta.begin() + 1, beta.begin() + 1 + n);
  return out;
}

ExactRational prob_none_exact(int k, int n) {
  const BetaVector b = beta_backward(k, n);
  BigInt denom = 1;
  for (const auto &beta : b.betas) {
    denom *= beta;
  }
  return ExactRational(factorial(static_cast<unsigned>(n)), denom);
}

FloatProbability prob_none_float(int k, int n) {
  const BetaVector b = beta_backward(k, n);
  double log_p = 0.0;
  for (int r = 1; r <= n; ++r) {
    log_p += std::log(static_cast<double>(n - r + 1)) - log_big(b.at(r));
  }
  return {std::exp(log_p), log_p};
}

ExactRational prob_not_all_exact(int k, int n) {
  require_polygon_domain(k, n);
  const TermCoefficients coeffs(k, n);
  ExactRational sum(0);
  for (int j = 0; j <= n - k; ++j) {
    ExactRational term(binomial(static_cast<unsigned>(n - k + 1), static_cast<unsigned>(j + 1)),
                       coeffs.c_product(j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const ExactRational prefactor(factorial(static_cast<unsigned>(n)),
                                factorial(static_cast<unsigned>(n - k + 2)));
  return prefactor * sum;
}

ExactRational prob_all_exact(int k, int n) {
  require_polygon_domain(k, n);
  const TermCoefficients coeffs(k, n);
  const int m = n - k + 2;
  ExactRational sum(0);
  for (int j = 1; j <= m; ++j) {
    BigInt j_pow;
    mpz_ui_pow_ui(j_pow.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k - 3));
    ExactRational term = ExactRational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)), j_pow) /
                         coeffs.lambda_product(j);
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const ExactRational prefactor(factorial(static_cast<unsigned>(n)),
                                factorial(static_cast<unsigned>(m)) * m);
  return prefactor * sum;
}

ExactRational closed_form_full(int n) {
  if (n < 1) {
    throw InvalidDomain("n must be positive");
  }
  return ExactRational(BigInt(n), pow2(static_cast<unsigned>(n - 1)));
}

ExactRational prob_random_subset(int k, int n) {
  require_polygon_domain(k, n);
  ExactRational p = prob_none_exact(k, k);
  if (p != closed_form_full(k)) {
    throw std::logic_error("P(k,k) disagrees with k/2^(k-1) at k=" + std::to_string(k));
  }
  return p;
}

ExactRational expected_bad_subsets(int k, int n) {
  return ExactRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
         prob_random_subset(k, n);
}

} // namespace brokenstick::exact
