#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "brokenstick/stick_sample.hpp"

/// Brute-force ground truth by enumerating every k-subset of the pieces.
namespace brokenstick::oracle {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// True iff the largest length is strictly less than the sum of the others.
/// Throws InvalidDomain if fewer than 3 lengths or any length <= 0.
bool kgon_feasible(std::span<const double> lengths);

/// C(n, k) saturated at UINT64_MAX.
std::uint64_t count_subsets(int n, int k);

/// Strictly increasing 1-based piece indices i_1 < ... < i_k.
using SubsetChoice = std::vector<int>;

/// Lexicographic k-combinations of {1..n}.
class SubsetRange {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SubsetChoice;
    using difference_type = std::ptrdiff_t;
    using pointer = const SubsetChoice *;
    using reference = const SubsetChoice &;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator &operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }

    friend bool operator==(const iterator &a, const iterator &b) { return a.done_ == b.done_; }

  private:
    friend class SubsetRange;
    iterator(int n, int k);

    int n_ = 0;
    SubsetChoice current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, k_); }
  iterator end() const { return iterator(); }
  std::uint64_t size() const { return count_subsets(n_, k_); }

private:
  friend SubsetRange enumerate_subsets(int n, int k, std::uint64_t budget);
  SubsetRange(int n, int k) : n_(n), k_(k) {}

  int n_;
  int k_;
};

/// Throws InvalidDomain unless 3 <= k <= n, BudgetExceeded if C(n,k) > budget.
SubsetRange enumerate_subsets(int n, int k, std::uint64_t budget = kDefaultBudget);

/// Number of k-subsets of the pieces that fail to form a k-gon.
std::uint64_t count_bad_subsets(const StickSample &sample, int k,
                                std::uint64_t budget = kDefaultBudget);

/// Every k-subset fails.
bool no_kgon_bruteforce(const StickSample &sample, int k, std::uint64_t budget = kDefaultBudget);

/// Every k-subset forms.
bool all_kgon_bruteforce(const StickSample &sample, int k, std::uint64_t budget = kDefaultBudget);

} // namespace brokenstick::oracle
