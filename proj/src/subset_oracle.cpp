#include "brokenstick/subset_oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "brokenstick/error.hpp"

namespace brokenstick::oracle {

namespace {

// Same test as kgon_feasible without the argument checks.
bool feasible_unchecked(const double *lengths, size_t count) {
  size_t argmax = 0;
  for (size_t i = 1; i < count; ++i) {
    if (lengths[i] > lengths[argmax]) {
      argmax = i;
    }
  }
  double rest = 0.0;
  for (size_t i = 0; i < count; ++i) {
    if (i != argmax) {
      rest += lengths[i];
    }
  }
  return lengths[argmax] < rest;
}

} // namespace

bool kgon_feasible(std::span<const double> lengths) {
  if (lengths.size() < 3) {
    throw InvalidDomain("a k-gon needs at least 3 sides");
  }
  for (double x : lengths) {
    if (!(x > 0.0)) {
      throw InvalidDomain("side lengths must be positive");
    }
  }
  return feasible_unchecked(lengths.data(), lengths.size());
}

std::uint64_t count_subsets(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const auto factor = static_cast<std::uint64_t>(n - k + i);
    const unsigned __int128 wide = static_cast<unsigned __int128>(result) * factor / static_cast<unsigned>(i);
    if (wide > kMax) {
      return kMax;
    }
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

SubsetRange::iterator::iterator(int n, int k) : n_(n), current_(static_cast<size_t>(k)), done_(false) {
  for (int i = 0; i < k; ++i) {
    current_[static_cast<size_t>(i)] = i + 1;
  }
}

SubsetRange::iterator &SubsetRange::iterator::operator++() {
  if (done_) {
    return *this;
  }
  const int k = static_cast<int>(current_.size());
  int i = k - 1;
  while (i >= 0 && current_[static_cast<size_t>(i)] == n_ - k + i + 1) {
    --i;
  }
  if (i < 0) {
    done_ = true;
    return *this;
  }
  ++current_[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j) {
    current_[static_cast<size_t>(j)] = current_[static_cast<size_t>(j - 1)] + 1;
  }
  return *this;
}

SubsetRange enumerate_subsets(int n, int k, std::uint64_t budget) {
  require_polygon_domain(k, n);
  const std::uint64_t total = count_subsets(n, k);
  if (total > budget) {
    throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                         std::to_string(total) + " exceeds budget " + std::to_string(budget));
  }
  return SubsetRange(n, k);
}

std::uint64_t count_bad_subsets(const StickSample &sample, int k, std::uint64_t budget) {
  const auto pieces = sample.pieces();
  std::vector<double> chosen(static_cast<size_t>(k));
  std::uint64_t bad = 0;
  for (const SubsetChoice &subset : enumerate_subsets(sample.size(), k, budget)) {
    for (size_t i = 0; i < subset.size(); ++i) {
      chosen[i] = pieces[static_cast<size_t>(subset[i] - 1)];
    }
    if (!feasible_unchecked(chosen.data(), chosen.size())) {
      ++bad;
    }
  }
  return bad;
}

bool no_kgon_bruteforce(const StickSample &sample, int k, std::uint64_t budget) {
  return count_bad_subsets(sample, k, budget) == count_subsets(sample.size(), k);
}

bool all_kgon_bruteforce(const StickSample &sample, int k, std::uint64_t budget) {
  return count_bad_subsets(sample, k, budget) == 0;
}

} // namespace brokenstick::oracle
