#include "brokenstick/stick_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "brokenstick/error.hpp"

namespace brokenstick::sim {

namespace {

std::vector<double> spacings(std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> pieces;
  pieces.reserve(cuts.size() + 1);
  double previous = 0.0;
  for (double c : cuts) {
    pieces.push_back(c - previous);
    previous = c;
  }
  pieces.push_back(1.0 - previous);
  return pieces;
}

bool all_positive(const std::vector<double> &v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

void require_trials(std::uint64_t trials, int streams) {
  if (trials == 0) {
    throw ZeroTrials("trials must be at least 1");
  }
  if (streams < 1) {
    throw InvalidDomain("streams must be at least 1");
  }
}

std::uint64_t stream_share(std::uint64_t trials, int streams, int index) {
  const auto s = static_cast<std::uint64_t>(streams);
  const auto i = static_cast<std::uint64_t>(index);
  return trials / s + (i < trials % s ? 1 : 0);
}

// Runs fn(stream_index) for every stream, on up to hardware_concurrency
// threads. Results are stored by stream index.
template <typename Result, typename Fn>
std::vector<Result> run_streams(int streams, Fn fn) {
  std::vector<Result> results(static_cast<size_t>(streams));
  const int workers =
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, streams);
  if (workers == 1) {
    for (int i = 0; i < streams; ++i) {
      results[static_cast<size_t>(i)] = fn(i);
    }
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < streams; i += workers) {
        results[static_cast<size_t>(i)] = fn(i);
      }
    });
  }
  pool.clear(); // joins
  return results;
}

} // namespace

StickSample break_stick(int n, Rng &rng) {
  if (n < 1) {
    throw InvalidDomain("n must be at least 1");
  }
  std::vector<double> cuts(static_cast<size_t>(n - 1));
  for (;;) {
    for (auto &c : cuts) {
      c = rng.uniform01();
    }
    auto pieces = spacings(cuts);
    if (all_positive(pieces)) {
      return StickSample::from_pieces(std::move(pieces));
    }
  }
}

StickSample break_stick_from_cuts(std::span<const double> cuts) {
  for (double c : cuts) {
    if (!(c > 0.0 && c < 1.0)) {
      throw InvalidDomain("cut points must lie in (0, 1)");
    }
  }
  auto pieces = spacings(std::vector<double>(cuts.begin(), cuts.end()));
  if (!all_positive(pieces)) {
    throw InvalidDomain("duplicate cut points");
  }
  return StickSample::from_pieces(std::move(pieces));
}

StickSample break_stick_from_exponentials(std::span<const double> values) {
  if (values.empty()) {
    throw InvalidDomain("need at least one exponential variate");
  }
  double total = 0.0;
  for (double y : values) {
    if (!(y > 0.0)) {
      throw InvalidDomain("exponential variates must be positive");
    }
    total += y;
  }
  std::vector<double> pieces;
  pieces.reserve(values.size());
  for (double y : values) {
    pieces.push_back(y / total);
  }
  return StickSample::from_pieces(std::move(pieces));
}

StickSample break_stick_exponential(int n, Rng &rng) {
  if (n < 1) {
    throw InvalidDomain("n must be at least 1");
  }
  std::vector<double> ys(static_cast<size_t>(n));
  for (auto &y : ys) {
    y = rng.exponential();
  }
  return break_stick_from_exponentials(ys);
}

bool no_kgon_event(const StickSample &sample, int k) {
  const int n = sample.size();
  require_polygon_domain(k, n);
  const auto s = sample.sorted();
  // window = s[r-k+1] + ... + s[r-1] (0-based r)
  double window = 0.0;
  for (int i = 0; i < k - 1; ++i) {
    window += s[static_cast<size_t>(i)];
  }
  for (int r = k - 1; r < n; ++r) {
    if (!(s[static_cast<size_t>(r)] > window)) {
      return false;
    }
    window += s[static_cast<size_t>(r)] - s[static_cast<size_t>(r - k + 1)];
  }
  return true;
}

bool all_kgon_event(const StickSample &sample, int k) {
  const int n = sample.size();
  require_polygon_domain(k, n);
  const auto s = sample.sorted();
  double smallest = 0.0;
  for (int i = 0; i < k - 1; ++i) {
    smallest += s[static_cast<size_t>(i)];
  }
  return s[static_cast<size_t>(n - 1)] < smallest;
}

oracle::SubsetChoice random_subset(int n, int k, Rng &rng) {
  require_polygon_domain(k, n);
  std::vector<int> indices(static_cast<size_t>(n));
  std::iota(indices.begin(), indices.end(), 1);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(indices[static_cast<size_t>(i)], indices[j]);
  }
  indices.resize(static_cast<size_t>(k));
  std::sort(indices.begin(), indices.end());
  return indices;
}

bool random_subset_event(const StickSample &sample, int k, Rng &rng) {
  const auto subset = random_subset(sample.size(), k, rng);
  const auto pieces = sample.pieces();
  std::vector<double> chosen;
  chosen.reserve(subset.size());
  for (int i : subset) {
    chosen.push_back(pieces[static_cast<size_t>(i - 1)]);
  }
  return !oracle::kgon_feasible(chosen);
}

std::string_view to_string(Event e) {
  switch (e) {
  case Event::none:
    return "none";
  case Event::not_all:
    return "not_all";
  case Event::all:
    return "all";
  case Event::random_subset:
    return "random_subset";
  }
  return "unknown";
}

Event event_from_string(std::string_view name) {
  for (Event e : {Event::none, Event::not_all, Event::all, Event::random_subset}) {
    if (to_string(e) == name) {
      return e;
    }
  }
  throw InvalidDomain("unknown event: " + std::string(name));
}

std::string_view to_string(Generator g) {
  return g == Generator::uniform_cuts ? "uniform" : "exponential";
}

Generator generator_from_string(std::string_view name) {
  if (name == "uniform") {
    return Generator::uniform_cuts;
  }
  if (name == "exponential") {
    return Generator::exponential;
  }
  throw InvalidDomain("unknown generator: " + std::string(name));
}

Sampler make_sampler(Generator g) {
  if (g == Generator::exponential) {
    return [](int n, Rng &rng) { return break_stick_exponential(n, rng); };
  }
  return [](int n, Rng &rng) { return break_stick(n, rng); };
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) {
    throw ZeroTrials("trials must be at least 1");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

Estimate estimate_probability(Event event, int k, int n, std::uint64_t trials, std::uint64_t seed,
                              int streams, Generator generator) {
  return estimate_probability(event, k, n, trials, seed, streams, make_sampler(generator));
}

Estimate estimate_probability(Event event, int k, int n, std::uint64_t trials, std::uint64_t seed,
                              int streams, const Sampler &sampler) {
  require_polygon_domain(k, n);
  require_trials(trials, streams);

  const auto counts = run_streams<std::uint64_t>(streams, [&](int index) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(index));
    std::uint64_t hits = 0;
    const std::uint64_t share = stream_share(trials, streams, index);
    for (std::uint64_t t = 0; t < share; ++t) {
      const StickSample sample = sampler(n, rng);
      bool hit = false;
      switch (event) {
      case Event::none:
        hit = no_kgon_event(sample, k);
        break;
      case Event::not_all:
        hit = !all_kgon_event(sample, k);
        break;
      case Event::all:
        hit = all_kgon_event(sample, k);
        break;
      case Event::random_subset:
        hit = random_subset_event(sample, k, rng);
        break;
      }
      hits += hit ? 1 : 0;
    }
    return hits;
  });

  Estimate est;
  est.event_name = std::string(to_string(event));
  est.trials = trials;
  est.successes = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  est.p_hat = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  const Interval ci = wilson_interval(est.successes, trials);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  est.seed = seed;
  est.streams = streams;
  return est;
}

MeanEstimate estimate_mean_bad_subsets(int k, int n, std::uint64_t trials, std::uint64_t seed,
                                       int streams, std::uint64_t budget, Generator generator) {
  require_polygon_domain(k, n);
  require_trials(trials, streams);
  if (trials < 2) {
    throw InvalidDomain("the mean of H needs at least 2 trials");
  }
  if (oracle::count_subsets(n, k) > budget) {
    throw BudgetExceeded("C(n,k) exceeds the enumeration budget");
  }
  const Sampler sampler = make_sampler(generator);

  struct Moments {
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
  };
  const auto parts = run_streams<Moments>(streams, [&](int index) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(index));
    Moments m;
    const std::uint64_t share = stream_share(trials, streams, index);
    for (std::uint64_t t = 0; t < share; ++t) {
      const std::uint64_t h = oracle::count_bad_subsets(sampler(n, rng), k, budget);
      m.sum += h;
      m.sum_sq += static_cast<unsigned __int128>(h) * h;
    }
    return m;
  });

  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  for (const auto &m : parts) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const auto count = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(sum) / count;
  long double var =
      (static_cast<long double>(sum_sq) - count * mean * mean) / (count - 1.0L);
  var = std::max(var, 0.0L);

  MeanEstimate out;
  out.trials = trials;
  out.mean = static_cast<double>(mean);
  out.std_dev = static_cast<double>(std::sqrt(var));
  out.std_err = out.std_dev / std::sqrt(static_cast<double>(trials));
  out.ci_low = out.mean - kZ95 * out.std_err;
  out.ci_high = out.mean + kZ95 * out.std_err;
  out.seed = seed;
  out.streams = streams;
  return out;
}

} // namespace brokenstick::sim
