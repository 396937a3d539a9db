#pragma once

#include <cstdint>

namespace totirr {

/// SplitMix64. Small, seedable, and splittable: `split(k)` yields an
/// independent stream for substream index k without touching this state,
/// so parallel workers can reproduce any sample from (seed, index) alone.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  SplitMix64 split(std::uint64_t k) const {
    return SplitMix64(mix(state_ ^ mix(k + 0xD1B54A32D192ED03ULL)));
  }

  /// Uniform integer in [0, bound). Rejection sampling keeps the result
  /// independent of the standard library's distribution implementation.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace totirr
