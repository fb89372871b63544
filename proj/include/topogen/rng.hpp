#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace topogen {

/// Seeded random source. Every draw derives from the fully specified
/// mt19937_64 stream through fixed bit manipulations, so a seed identifies
/// the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % bound + 1) % bound;
    const std::uint64_t cap = max - rem;
    std::uint64_t draw = next_u64();
    while (draw > cap) draw = next_u64();
    return draw % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double probability) { return uniform_unit() < probability; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace topogen
