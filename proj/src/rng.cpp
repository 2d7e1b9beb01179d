#include "brokenstick/rng.hpp"

#include <bit>
#include <cmath>

namespace brokenstick {

Rng::Rng(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto &word : s_) {
    word = sm.next();
  }
}

std::uint64_t Rng::derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
  return SplitMix64::mix(master_seed ^ SplitMix64::mix(stream_index + 0x9E3779B97F4A7C15ULL));
}

Rng Rng::stream(std::uint64_t master_seed, std::uint64_t stream_index) {
  return Rng(derive_stream_seed(master_seed, stream_index));
}

std::uint64_t Rng::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() {
  // (m + 0.5) / 2^53 for m in [0, 2^53): never 0, never 1.
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::exponential() { return -std::log(uniform01()); }

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) {
      return x % bound;
    }
  }
}

} // namespace brokenstick
