#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace brokenstick {

/// SplitMix64 (Steele, Lea & Flood). Used for seeding and stream derivation.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// The SplitMix64 output finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/**
 * xoshiro256** with platform-independent derived distributions.
 *
 * Substreams: stream i of master seed s is seeded with
 *   SplitMix64::mix(s ^ SplitMix64::mix(i + 0x9E3779B97F4A7C15))
 * and its four state words are successive SplitMix64 outputs from that seed.
 * Uniform doubles use the top 53 bits, so results are bit-identical across
 * platforms (std:: distributions are not).
 */
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index);
  static std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }
  std::uint64_t next();

  /// Uniform on the open interval (0, 1).
  double uniform01();

  /// Unit-mean exponential, strictly positive.
  double exponential();

  /// Uniform integer in [0, bound), unbiased by rejection. bound > 0.
  std::uint64_t below(std::uint64_t bound);

private:
  std::array<std::uint64_t, 4> s_{};
};

} // namespace brokenstick
