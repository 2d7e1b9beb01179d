#include <doctest.h>

#include <set>
#include <vector>

#include "brokenstick/rng.hpp"

using brokenstick::Rng;
using brokenstick::SplitMix64;

TEST_CASE("SplitMix64 reference outputs") {
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xe220a8397b1dcdafULL);
  CHECK(sm.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(sm.next() == 0x06c45d188009454fULL);
}

TEST_CASE("xoshiro256** seeded through SplitMix64") {
  Rng rng(42);
  CHECK(rng.next() == 0x15780b2e0c2ec716ULL);
  CHECK(rng.next() == 0x6104d9866d113a7eULL);
  CHECK(rng.next() == 0xae17533239e499a1ULL);
}

TEST_CASE("streams are deterministic and distinct") {
  Rng a = Rng::stream(7, 3);
  Rng b = Rng::stream(7, 3);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(a.next() == b.next());
  }
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    firsts.insert(Rng::stream(7, i).next());
  }
  CHECK(firsts.size() == 1000);
  CHECK(Rng::derive_stream_seed(1, 0) != Rng::derive_stream_seed(2, 0));
}

TEST_CASE("uniform01 stays inside the open interval and is centred") {
  Rng rng(1);
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // std error of the mean is sqrt(1/12/n) ~ 6.5e-4
  CHECK(sum / kDraws == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("exponential variates are positive with unit mean") {
  Rng rng(2);
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double e = rng.exponential();
    REQUIRE(e > 0.0);
    sum += e;
  }
  CHECK(sum / kDraws == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("below() covers the range evenly") {
  Rng rng(3);
  constexpr int kBins = 7;
  constexpr int kDraws = 70000;
  std::vector<int> counts(kBins, 0);
  for (int i = 0; i < kDraws; ++i) {
    const auto v = rng.below(kBins);
    REQUIRE(v < kBins);
    ++counts[v];
  }
  double chi2 = 0.0;
  for (int c : counts) {
    const double expected = static_cast<double>(kDraws) / kBins;
    chi2 += (c - expected) * (c - expected) / expected;
  }
  CHECK(chi2 < 22.46); // chi-square(6) at p = 0.001
  CHECK(rng.below(1) == 0);
}
