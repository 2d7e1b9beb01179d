#pragma once

#include <cstdint>
#include <vector>

#include "brokenstick/rational.hpp"

/// Exact probabilities for the three broken-stick k-gon problems.
///
/// Conventions: a stick of unit length is cut at n-1 uniform points.
///   P(k,n)      probability that no k of the n pieces form a k-gon
///   Qbar(k,n)   probability that at least one k-subset fails
///   Q(k,n)      probability that every k-subset forms a k-gon
///   Prand(k,n)  probability that a uniformly chosen k-subset fails
///   E[H(k,n)]   expected number of failing k-subsets
/// Every function requires 3 <= k <= n and throws InvalidDomain otherwise.
namespace brokenstick::exact {

/// The weights beta_1..beta_n with P(k,n) = n! / prod beta_r.
struct BetaVector {
  int k = 0;
  int n = 0;
  std::vector<BigInt> betas; // betas[r-1] holds beta_r

  /// 1-based access, r in [1, n].
  const BigInt &at(int r) const { return betas.at(static_cast<size_t>(r - 1)); }

  friend bool operator==(const BetaVector &, const BetaVector &) = default;
};

/// Coefficient grids for the not-all and all-form sums.
///   c(r, j)      = (j+2)(k-1-r) + n-k+2,  r = 1..k-1, j = 0..n-k
///   lambda(r, j) = r+1 + (n-k+2)/j,       r = 0..k-3, j = 1..n-k+2
class TermCoefficients {
public:
  TermCoefficients(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }

  std::int64_t c(int r, int j) const;
  const ExactRational &lambda(int r, int j) const;

  /// prod_{r=1}^{k-2} c(r, j)
  BigInt c_product(int j) const;
  /// prod_{r=0}^{k-3} lambda(r, j)
  ExactRational lambda_product(int j) const;

private:
  int k_;
  int n_;
  std::vector<std::int64_t> c_;        // (k-1) x (n-k+1), row-major
  std::vector<ExactRational> lambda_;  // (k-2) x (n-k+2), row-major
};

/// Sums the vectors b_r of the forward recursion
///   b_1 = e_1, b_r = e_r + b_{r-1} (r < k), b_r = e_r + sum_{u=1}^{k-1} b_{r-u} (r >= k)
/// keeping a running window sum of the last k-1 vectors.
BetaVector beta_forward(int k, int n);

/// Same weights from the right-to-left recursion with beta_{n+1..n+k-2} = 0.
BetaVector beta_backward(int k, int n);

/// n! / prod beta_r, reduced.
ExactRational prob_none_exact(int k, int n);

struct FloatProbability {
  double probability = 0.0;     // may underflow to 0 for large n
  double log_probability = 0.0; // always finite
};

/// prod_r (n-r+1)/beta_r accumulated as a sum of logs.
FloatProbability prob_none_float(int k, int n);

/// Qbar(k,n) = n!/(n-k+2)! * sum_{j=0}^{n-k} (-1)^j C(n-k+1, j+1) / prod_{r=1}^{k-2} c(r,j)
ExactRational prob_not_all_exact(int k, int n);

/// Q(k,n) from the lambda form. Equals 1 - Qbar(k,n).
ExactRational prob_all_exact(int k, int n);

/// P(k,k); checked against the closed form k / 2^(k-1).
ExactRational prob_random_subset(int k, int n);

/// C(n,k) * k / 2^(k-1)
ExactRational expected_bad_subsets(int k, int n);

/// n / 2^(n-1)
ExactRational closed_form_full(int n);

} // namespace brokenstick::exact
