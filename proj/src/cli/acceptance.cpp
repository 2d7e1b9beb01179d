#include "brokenstick/cli/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "brokenstick/cli/app.hpp"
#include "brokenstick/exact_core.hpp"
#include "brokenstick/reconcile.hpp"
#include "brokenstick/stick_sim.hpp"
#include "brokenstick/subset_oracle.hpp"

namespace brokenstick::cli::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// A criterion body returns an empty string on success, else the first
// failure it found.
using Body = std::function<std::string(std::ostringstream &notes)>;

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;
  bool needs_simulation;
  Body body;
};

std::string pair_label(int k, int n) {
  return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

std::string closed_form() {
  for (int n = 3; n <= 25; ++n) {
    const ExactRational expected = exact::closed_form_full(n);
    if (exact::prob_none_exact(n, n) != expected) {
      return "P(n,n) != n/2^(n-1) at n=" + std::to_string(n);
    }
    if (exact::prob_not_all_exact(n, n) != expected) {
      return "Qbar(n,n) != n/2^(n-1) at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string identity_suite(std::ostringstream &notes) {
  int cases = 0;
  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= n; ++k) {
      const ExactRational q_bar = exact::prob_not_all_exact(k, n);
      if (exact::prob_all_exact(k, n) + q_bar != ExactRational(1)) {
        return "Q + Qbar != 1 at " + pair_label(k, n);
      }
      if (exact::prob_none_exact(k, n) > q_bar) {
        return "P > Qbar at " + pair_label(k, n);
      }
      ++cases;
    }
  }
  notes << cases << " pairs";
  return {};
}

std::string triple_path(std::ostringstream &notes) {
  int cases = 0;
  long checks = 0;
  for (int n = 3; n <= 50; ++n) {
    for (int k = 3; k <= n; ++k) {
      const auto backward = exact::beta_backward(k, n);
      if (exact::beta_forward(k, n) != backward) {
        return "beta_forward != beta_backward at " + pair_label(k, n);
      }
      if (exact::prob_none_exact(k, n) != reconcile::prob_none_verreault(k, n)) {
        return "beta-product form != Fibonacci form at " + pair_label(k, n);
      }
      const auto report = reconcile::reconcile_report(backward);
      if (!report.passed()) {
        const auto *f = report.first_failure();
        return f->identity + " fails at index " + std::to_string(f->index) + " " + pair_label(k, n);
      }
      checks += report.checks;
      ++cases;
    }
  }
  notes << cases << " pairs, " << checks << " sequence checks";
  return {};
}

std::string random_subset_independence() {
  for (int k = 3; k <= 6; ++k) {
    const ExactRational expected = exact::closed_form_full(k);
    for (int offset : {0, 3, 10, 50}) {
      if (exact::prob_random_subset(k, k + offset) != expected) {
        return "Prand differs at " + pair_label(k, k + offset);
      }
    }
  }
  return {};
}

std::string expected_h() {
  const struct {
    int k, n;
    long num, den;
  } cases[] = {{3, 4, 3, 1}, {3, 3, 3, 4}, {4, 6, 15, 2}};
  for (const auto &c : cases) {
    const ExactRational got = exact::expected_bad_subsets(c.k, c.n);
    if (got != ExactRational(BigInt(c.num), BigInt(c.den))) {
      return "E[H] = " + got.to_string() + " at " + pair_label(c.k, c.n);
    }
  }
  return {};
}

std::string monte_carlo(std::uint64_t seed, std::ostringstream &notes) {
  constexpr std::uint64_t kTrials = 1'000'000;
  constexpr int kStreams = 8;
  constexpr double kSigmas = 4.0;
  const std::pair<int, int> grid[] = {{3, 3}, {3, 4}, {3, 7}, {4, 6}, {5, 5}, {4, 9}};
  double worst_z = 0.0;
  for (const auto &[k, n] : grid) {
    const std::pair<sim::Event, ExactRational> events[] = {
        {sim::Event::none, exact::prob_none_exact(k, n)},
        {sim::Event::not_all, exact::prob_not_all_exact(k, n)},
        {sim::Event::random_subset, exact::prob_random_subset(k, n)},
    };
    for (const auto &[event, value] : events) {
      const auto est = sim::estimate_probability(event, k, n, kTrials, seed, kStreams);
      const double diff = std::abs(est.p_hat - value.to_double());
      const double z = est.std_err > 0 ? diff / est.std_err : (diff == 0 ? 0.0 : INFINITY);
      worst_z = std::max(worst_z, z);
      if (!(diff <= kSigmas * est.std_err)) {
        std::ostringstream s;
        s << sim::to_string(event) << " at " << pair_label(k, n) << ": p_hat=" << est.p_hat
          << " exact=" << value.to_double() << " z=" << z;
        return s.str();
      }
    }
  }
  const auto h = sim::estimate_mean_bad_subsets(3, 4, 100'000, seed, kStreams);
  const double h_z = std::abs(h.mean - 3.0) / h.std_err;
  if (!(h_z <= kSigmas)) {
    std::ostringstream s;
    s << "mean H(3,4)=" << h.mean << " z=" << h_z;
    return s.str();
  }
  notes << "18 estimates, worst |z|=" << worst_z << "; mean H(3,4)=" << h.mean << " |z|=" << h_z
        << "; seed " << seed;
  return {};
}

std::string oracle_equivalence(std::uint64_t seed, std::ostringstream &notes) {
  constexpr int kSamplesPerGenerator = 5'000;
  long samples = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int k = 3; k <= n; ++k) {
      const std::uint64_t total = oracle::count_subsets(n, k);
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(100 * n + k));
      for (int i = 0; i < 2 * kSamplesPerGenerator; ++i) {
        const StickSample s = i < kSamplesPerGenerator ? sim::break_stick(n, rng)
                                                       : sim::break_stick_exponential(n, rng);
        const std::uint64_t bad = oracle::count_bad_subsets(s, k);
        if (sim::no_kgon_event(s, k) != (bad == total)) {
          return "no_kgon_event disagrees with enumeration at " + pair_label(k, n);
        }
        if (sim::all_kgon_event(s, k) != (bad == 0)) {
          return "all_kgon_event disagrees with enumeration at " + pair_label(k, n);
        }
        ++samples;
      }
    }
  }
  notes << samples << " samples over 55 pairs";
  return {};
}

std::string large_instance(std::ostringstream &notes) {
  // n = 200 pieces, k = 196 sides
  const auto t0 = Clock::now();
  const auto fp = exact::prob_none_float(196, 200);
  const double float_seconds = seconds_since(t0);

  const auto t1 = Clock::now();
  const ExactRational p = exact::prob_none_exact(196, 200);
  const double exact_seconds = seconds_since(t1);

  if (!std::isfinite(fp.log_probability)) {
    return "float log value is not finite";
  }
  const double exact_log = p.log();
  const double rel = std::abs(fp.log_probability - exact_log) / std::abs(exact_log);
  notes << "log P=" << fp.log_probability << " rel err " << rel << ", float " << float_seconds * 1e3
        << " ms, exact " << exact_seconds * 1e3 << " ms";
  if (float_seconds >= 0.05) {
    return "float path took " + std::to_string(float_seconds) + " s";
  }
  if (exact_seconds >= 2.0) {
    return "exact path took " + std::to_string(exact_seconds) + " s";
  }
  if (!(rel <= 1e-9)) {
    return "relative error " + std::to_string(rel);
  }
  return {};
}

std::string determinism(std::uint64_t seed, std::ostringstream &notes) {
  const std::string s = std::to_string(seed);
  const std::vector<std::vector<std::string>> commands = {
      {"simulate", "--problem", "none", "-k", "3", "-n", "4", "--trials", "200000", "--seed", s,
       "--streams", "4", "--format", "json"},
      {"simulate", "--problem", "random_subset", "-k", "4", "-n", "9", "--trials", "100000",
       "--seed", s, "--streams", "3", "--generator", "exponential", "--format", "csv"},
      {"simulate", "--problem", "expected_bad", "-k", "3", "-n", "4", "--trials", "20000", "--seed",
       s, "--streams", "5"},
  };
  for (const auto &args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int rc1 = run(args, out1, err1);
    const int rc2 = run(args, out2, err2);
    if (rc1 != 0 || rc2 != 0) {
      return "simulate exited " + std::to_string(rc1) + "/" + std::to_string(rc2) + ": " + err1.str();
    }
    if (out1.str() != out2.str() || out1.str().empty()) {
      return "outputs differ for simulate --problem " + args[2];
    }
  }
  notes << commands.size() << " commands repeated byte-identically";
  return {};
}

} // namespace

std::vector<CriterionResult> run_all(const Options &options, std::ostream &log) {
  const std::uint64_t seed = options.seed;
  const std::vector<Criterion> criteria = {
      {1, "closed form P(n,n) = Qbar(n,n) = n/2^(n-1), 3 <= n <= 25", 1.0, false,
       [](std::ostringstream &) { return closed_form(); }},
      {2, "Q + Qbar = 1 and P <= Qbar, 3 <= k <= n <= 30", 10.0, false, identity_suite},
      {3, "beta forward = backward, beta form = Fibonacci form, xi = f, mu = h, n <= 50", 30.0,
       false, triple_path},
      {4, "Prand(k,n) independent of n and equal to k/2^(k-1), k = 3..6", 1.0, false,
       [](std::ostringstream &) { return random_subset_independence(); }},
      {5, "E[H] = 3, 3/4, 15/2 at (3,4), (3,3), (4,6)", 1.0, false,
       [](std::ostringstream &) { return expected_h(); }},
      {6, "Monte Carlo within 4 std errors on the 6-pair grid, mean H(3,4) near 3", 180.0, true,
       [seed](std::ostringstream &notes) { return monte_carlo(seed, notes); }},
      {7, "O(n) event checks agree with subset enumeration, n <= 12", 60.0, true,
       [seed](std::ostringstream &notes) { return oracle_equivalence(seed, notes); }},
      {8, "P(196,200) float path < 50 ms, log within 1e-9 of exact, exact < 2 s", 2.5, false,
       large_instance},
      {9, "repeated simulate invocations are byte-identical", 600.0, true,
       [seed](std::ostringstream &notes) { return determinism(seed, notes); }},
  };

  std::vector<CriterionResult> results;
  for (const auto &c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    if (options.quick && c.needs_simulation) {
      r.status = Status::skipped;
      r.detail = "skipped in quick mode";
    } else {
      std::ostringstream notes;
      const auto start = Clock::now();
      std::string failure;
      try {
        failure = c.body(notes);
      } catch (const std::exception &e) {
        failure = std::string("exception: ") + e.what();
      }
      r.seconds = seconds_since(start);
      if (failure.empty() && r.seconds >= c.time_limit_seconds) {
        failure = "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
      }
      r.status = failure.empty() ? Status::pass : Status::fail;
      r.detail = failure.empty() ? notes.str() : failure;
    }

    const char *tag = r.status == Status::pass ? "[PASS]" : (r.status == Status::fail ? "[FAIL]" : "[SKIP]");
    log << tag << " criterion " << r.id << ": " << r.title;
    if (r.status != Status::skipped) {
      std::ostringstream secs;
      secs.precision(3);
      secs << std::fixed << r.seconds;
      log << " (" << secs.str() << " s)";
    }
    if (!r.detail.empty()) {
      log << " -- " << r.detail;
    }
    log << '\n';
    log.flush();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult> &results) {
  for (const auto &r : results) {
    if (r.status == Status::fail) {
      return false;
    }
  }
  return true;
}

} // namespace brokenstick::cli::acceptance
