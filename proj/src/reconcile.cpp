#include "brokenstick/reconcile.hpp"

#include "brokenstick/error.hpp"

namespace brokenstick::reconcile {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

// F and f (u, j = 0..n); g and h (2..k-2).
void build_fibonacci_family(ReconcileSequences &s) {
  const int k = s.k;
  const int n = s.n;
  s.F.assign(idx(n + 1), 0);
  s.F[idx(k - 2)] = 1;
  BigInt window = 1; // sum of F_{u-1} .. F_{u-k+1}
  for (int u = k - 1; u <= n; ++u) {
    s.F[idx(u)] = window;
    window += s.F[idx(u)];
    if (u - k + 1 >= 0) {
      window -= s.F[idx(u - k + 1)];
    }
  }

  s.f.assign(idx(n + 1), 0);
  BigInt running = 0;
  for (int j = k - 2; j <= n; ++j) {
    running += s.F[idx(j)];
    s.f[idx(j)] = running;
  }

  s.g.clear();
  s.h.clear();
  if (k >= 4) {
    BigInt partial = 1;
    for (int u = 2; u <= k - 2; ++u) {
      partial += s.f[idx(n - u)];
      s.g.push_back(partial);
    }
    BigInt acc = s.f[idx(n)];
    for (int j = 2; j <= k - 2; ++j) {
      acc += s.g_at(k - j);
      s.h.push_back(acc);
    }
  }
}

void fill_from_beta(ReconcileSequences &s, const exact::BetaVector &beta) {
  const int k = s.k;
  const int n = s.n;
  s.xi.assign(idx(n + 1), 0);
  for (int j = 0; j <= n; ++j) {
    const int r = n + k - 2 - j;
    s.xi[idx(j)] = r <= n ? beta.at(r) : BigInt(0);
  }
  s.mu.clear();
  for (int j = 2; j <= k - 2; ++j) {
    s.mu.push_back(beta.at(k - 1 - j));
  }
}

void fail(Report &report, std::string identity, int index, const std::string &detail) {
  report.failures.push_back({std::move(identity), index, detail});
}

std::string mismatch(const BigInt &lhs, const BigInt &rhs) {
  return lhs.get_str() + " != " + rhs.get_str();
}

} // namespace

ReconcileSequences build_sequences(const exact::BetaVector &beta) {
  require_polygon_domain(beta.k, beta.n);
  if (static_cast<int>(beta.betas.size()) != beta.n) {
    throw InvalidDomain("beta vector length does not match n");
  }
  ReconcileSequences s;
  s.k = beta.k;
  s.n = beta.n;
  build_fibonacci_family(s);
  fill_from_beta(s, beta);
  return s;
}

ReconcileSequences build_sequences(int k, int n) {
  return build_sequences(exact::beta_backward(k, n));
}

Report check_simplified_recursions(const ReconcileSequences &seqs) {
  Report report{seqs.k, seqs.n, 0, {}};
  const int k = seqs.k;
  const int n = seqs.n;
  const auto &f = seqs.f;

  for (int j = 0; j <= k - 3; ++j) {
    ++report.checks;
    if (f[idx(j)] != 0) {
      fail(report, "f_initial_zero", j, mismatch(f[idx(j)], 0));
    }
  }
  ++report.checks;
  if (f[idx(k - 2)] != 1) {
    fail(report, "f_initial_one", k - 2, mismatch(f[idx(k - 2)], 1));
  }
  for (int j = k - 1; j <= n; ++j) {
    BigInt rhs = 1;
    for (int r = 1; r <= k - 1; ++r) {
      rhs += f[idx(j - r)];
    }
    ++report.checks;
    if (f[idx(j)] != rhs) {
      fail(report, "f_simplified_recursion", j, mismatch(f[idx(j)], rhs));
    }
  }

  if (k >= 4) {
    BigInt tail = 0; // sum_{r=2}^{k-j} f(n-r)
    for (int r = 2; r <= k - 2; ++r) {
      tail += f[idx(n - r)];
    }
    BigInt expected = 1 + f[idx(n)] + tail;
    ++report.checks;
    if (seqs.h_at(2) != expected) {
      fail(report, "h_simplified_recursion", 2, mismatch(seqs.h_at(2), expected));
    }
    for (int j = 3; j <= k - 2; ++j) {
      tail -= f[idx(n - (k - j + 1))];
      expected = 1 + seqs.h_at(j - 1) + tail;
      ++report.checks;
      if (seqs.h_at(j) != expected) {
        fail(report, "h_simplified_recursion", j, mismatch(seqs.h_at(j), expected));
      }
    }
  }
  return report;
}

namespace {

ExactRational verreault_from(const ReconcileSequences &s) {
  BigInt denom = 1;
  for (int j = s.k - 2; j <= s.n; ++j) {
    denom *= s.f[idx(j)];
  }
  for (const auto &h : s.h) {
    denom *= h;
  }
  return ExactRational(factorial(static_cast<unsigned>(s.n)), denom);
}

} // namespace

ExactRational prob_none_verreault(int k, int n) {
  require_polygon_domain(k, n);
  ReconcileSequences s;
  s.k = k;
  s.n = n;
  build_fibonacci_family(s);
  return verreault_from(s);
}

Report reconcile_report(const exact::BetaVector &beta) {
  const ReconcileSequences s = build_sequences(beta);
  Report report = check_simplified_recursions(s);
  const int k = s.k;
  const int n = s.n;

  for (int j = 0; j <= k - 3; ++j) {
    ++report.checks;
    if (s.xi[idx(j)] != 0) {
      fail(report, "xi_initial_zero", j, mismatch(s.xi[idx(j)], 0));
    }
  }
  ++report.checks;
  if (s.xi[idx(k - 2)] != 1) {
    fail(report, "xi_initial_one", k - 2, mismatch(s.xi[idx(k - 2)], 1));
  }
  for (int j = k - 2; j <= n; ++j) {
    ++report.checks;
    if (s.xi[idx(j)] != s.f[idx(j)]) {
      fail(report, "xi_equals_f", j, mismatch(s.xi[idx(j)], s.f[idx(j)]));
    }
  }
  for (int j = 2; j <= k - 2; ++j) {
    ++report.checks;
    if (s.mu_at(j) != s.h_at(j)) {
      fail(report, "mu_equals_h", j, mismatch(s.mu_at(j), s.h_at(j)));
    }
  }

  BigInt beta_product = 1;
  for (const auto &b : beta.betas) {
    beta_product *= b;
  }
  ++report.checks;
  if (beta_product == 0) {
    fail(report, "verreault_equals_beta_form", 0, "beta product is zero");
  } else {
    const ExactRational from_beta(factorial(static_cast<unsigned>(n)), beta_product);
    const ExactRational from_f = verreault_from(s);
    if (from_beta != from_f) {
      fail(report, "verreault_equals_beta_form", 0,
           from_beta.to_string() + " != " + from_f.to_string());
    }
  }
  return report;
}

Report reconcile_report(int k, int n) {
  return reconcile_report(exact::beta_backward(k, n));
}

} // namespace brokenstick::reconcile
