#pragma once

// Test-only reference computations, deliberately independent of the
// library's formulas.

#include <stdexcept>
#include <vector>

#include "brokenstick/rational.hpp"

namespace oracles {

using brokenstick::BigInt;
using brokenstick::ExactRational;

/// Literal forward recursion: keeps every b_r and sums the k-1 predecessors
/// directly, O(n^2 k).
inline std::vector<BigInt> naive_betas(int k, int n) {
  std::vector<std::vector<BigInt>> b(static_cast<size_t>(n + 1), std::vector<BigInt>(static_cast<size_t>(n), 0));
  for (int r = 1; r <= n; ++r) {
    auto &row = b[static_cast<size_t>(r)];
    row[static_cast<size_t>(r - 1)] = 1;
    if (r >= 2 && r <= k - 1) {
      for (int i = 0; i < n; ++i) {
        row[static_cast<size_t>(i)] += b[static_cast<size_t>(r - 1)][static_cast<size_t>(i)];
      }
    } else if (r >= k) {
      for (int u = 1; u <= k - 1; ++u) {
        for (int i = 0; i < n; ++i) {
          row[static_cast<size_t>(i)] += b[static_cast<size_t>(r - u)][static_cast<size_t>(i)];
        }
      }
    }
  }
  std::vector<BigInt> beta(static_cast<size_t>(n), 0);
  for (int r = 1; r <= n; ++r) {
    for (int i = 0; i < n; ++i) {
      beta[static_cast<size_t>(i)] += b[static_cast<size_t>(r)][static_cast<size_t>(i)];
    }
  }
  return beta;
}

/// P(sum_i a_i E_i > 0) for iid unit exponentials E_i and distinct nonzero a_i:
/// the sum over positive a_i of prod_{j != i} a_i / (a_i - a_j).
inline ExactRational positive_tail(const std::vector<ExactRational> &a) {
  ExactRational total(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].sign() <= 0) {
      continue;
    }
    ExactRational w(1);
    for (size_t j = 0; j < a.size(); ++j) {
      if (j == i) {
        continue;
      }
      if (a[i] == a[j]) {
        throw std::logic_error("positive_tail needs distinct coefficients");
      }
      w *= a[i] / (a[i] - a[j]);
    }
    total += w;
  }
  return total;
}

/// P(Y_n > Y_1 + ... + Y_{k-1}) for unit exponential order statistics,
/// via the spacing representation Y_r = sum_{i <= r} E_i / (n - i + 1).
inline ExactRational not_all_via_spacings(int k, int n) {
  std::vector<ExactRational> a;
  for (int i = 1; i <= n; ++i) {
    const int smaller_terms = i <= k - 1 ? k - i : 0; // # r in [i, k-1]
    const ExactRational c(BigInt(1 - smaller_terms), BigInt(n - i + 1));
    if (c.sign() != 0) {
      a.push_back(c);
    }
  }
  return positive_tail(a);
}

} // namespace oracles
