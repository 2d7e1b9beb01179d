#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "brokenstick/rng.hpp"
#include "brokenstick/stick_sample.hpp"
#include "brokenstick/subset_oracle.hpp"

/// Monte Carlo estimation of the broken-stick event probabilities.
namespace brokenstick::sim {

/// Cuts the unit stick at n-1 uniform points; pieces are the spacings.
/// Redraws if two cuts coincide.
StickSample break_stick(int n, Rng &rng);

/// Spacings of the given cut points in (0, 1), in any order.
/// Throws InvalidDomain on a cut outside (0, 1) or a zero-length piece.
StickSample break_stick_from_cuts(std::span<const double> cuts);

/// n unit exponentials normalized by their sum.
StickSample break_stick_exponential(int n, Rng &rng);

/// Normalizes the given positive values by their sum.
StickSample break_stick_from_exponentials(std::span<const double> values);

/// Sorted pieces satisfy d_(r) > d_(r-1) + ... + d_(r-k+1) for every r = k..n.
bool no_kgon_event(const StickSample &sample, int k);

/// d_(n) < d_(1) + ... + d_(k-1): every k-subset forms.
bool all_kgon_event(const StickSample &sample, int k);

/// Draws a uniform k-subset of piece indices; true iff it fails to form a k-gon.
bool random_subset_event(const StickSample &sample, int k, Rng &rng);

/// Uniform k-subset of {1..n}, sorted ascending.
oracle::SubsetChoice random_subset(int n, int k, Rng &rng);

enum class Event {
  none,          // no k-subset forms
  not_all,       // at least one k-subset fails
  all,           // every k-subset forms
  random_subset, // a uniformly chosen k-subset fails
};

std::string_view to_string(Event e);
/// Throws InvalidDomain on an unknown name.
Event event_from_string(std::string_view name);

enum class Generator {
  uniform_cuts,
  exponential,
};

std::string_view to_string(Generator g);
Generator generator_from_string(std::string_view name);

using Sampler = std::function<StickSample(int n, Rng &rng)>;

Sampler make_sampler(Generator g);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

inline constexpr double kZ95 = 1.96;

/// Wilson score interval for `successes` out of `trials`, clamped to [0, 1].
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

struct Estimate {
  std::string event_name;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double std_err = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  int streams = 1;

  friend bool operator==(const Estimate &, const Estimate &) = default;
};

/// Splits `trials` over `streams` substreams (stream i gets trials/streams,
/// plus one for i < trials % streams), runs them possibly in parallel, and
/// sums integer success counts. Bit-identical for identical arguments.
Estimate estimate_probability(Event event, int k, int n, std::uint64_t trials, std::uint64_t seed,
                              int streams, Generator generator = Generator::uniform_cuts);

/// Same, with an explicit sampler (for injected samples in tests).
Estimate estimate_probability(Event event, int k, int n, std::uint64_t trials, std::uint64_t seed,
                              int streams, const Sampler &sampler);

struct MeanEstimate {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std_dev = 0.0; // sample standard deviation
  double std_err = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  int streams = 1;

  friend bool operator==(const MeanEstimate &, const MeanEstimate &) = default;
};

/// Mean number of failing k-subsets H(k,n) by full enumeration per trial.
/// Throws BudgetExceeded if C(n,k) > budget, InvalidDomain if trials < 2.
MeanEstimate estimate_mean_bad_subsets(int k, int n, std::uint64_t trials, std::uint64_t seed,
                                       int streams,
                                       std::uint64_t budget = oracle::kDefaultBudget,
                                       Generator generator = Generator::uniform_cuts);

} // namespace brokenstick::sim
