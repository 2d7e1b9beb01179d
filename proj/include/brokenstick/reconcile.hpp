#pragma once

#include <string>
#include <vector>

#include "brokenstick/exact_core.hpp"
#include "brokenstick/rational.hpp"

/// The generalized-Fibonacci formulation of P(k,n) and its agreement with
/// the beta-weight formulation.
///
/// Sequences (all big integers):
///   F_u   order-(k-1) Fibonacci with F_0..F_{k-3} = 0, F_{k-2} = 1
///   f(j)  = sum_{r=k-2}^{j} F_r
///   g(u)  = 1 + sum_{r=2}^{u} f(n-r)            (u = 2..k-2)
///   h(j)  = f(n) + sum_{r=2}^{j} g(k-r)         (j = 2..k-2)
///   xi_j  = beta_{n+k-2-j}                       (j = 0..n, beta past n is 0)
///   mu_j  = beta_{k-1-j}                         (j = 2..k-2)
namespace brokenstick::reconcile {

struct ReconcileSequences {
  int k = 0;
  int n = 0;
  std::vector<BigInt> F;  // u = 0..n
  std::vector<BigInt> f;  // j = 0..n
  std::vector<BigInt> g;  // g[i] is g(i + 2); empty when k = 3
  std::vector<BigInt> h;  // h[i] is h(i + 2); empty when k = 3
  std::vector<BigInt> xi; // j = 0..n
  std::vector<BigInt> mu; // mu[i] is mu_{i + 2}; empty when k = 3

  const BigInt &g_at(int u) const { return g.at(static_cast<size_t>(u - 2)); }
  const BigInt &h_at(int j) const { return h.at(static_cast<size_t>(j - 2)); }
  const BigInt &mu_at(int j) const { return mu.at(static_cast<size_t>(j - 2)); }
};

struct Failure {
  std::string identity; // e.g. "xi_equals_f"
  int index = 0;        // offending 1-based sequence index, 0 when not indexed
  std::string detail;
};

struct Report {
  int k = 0;
  int n = 0;
  long checks = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  const Failure *first_failure() const { return failures.empty() ? nullptr : &failures.front(); }
};

/// xi and mu come from beta_backward(k, n).
ReconcileSequences build_sequences(int k, int n);

/// xi and mu come from the supplied weights (used to inject faults).
ReconcileSequences build_sequences(const exact::BetaVector &beta);

/// Checks f against f(j) = 1 + sum_{r=1}^{k-1} f(j-r) for j = k-1..n (plus its
/// initial values) and h against its simplified recursion for j = 2..k-2.
Report check_simplified_recursions(const ReconcileSequences &seqs);

/// n! / [ prod_{j=k-2}^{n} f(j) * prod_{j=2}^{k-2} h(j) ]
ExactRational prob_none_verreault(int k, int n);

/// Element-wise xi = f, mu = h, zero prefix of xi, the simplified
/// recursions, and equality of both P(k,n) formulas.
Report reconcile_report(int k, int n);
Report reconcile_report(const exact::BetaVector &beta);

} // namespace brokenstick::reconcile
