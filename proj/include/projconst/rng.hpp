#pragma once

#include <cstdint>
#include <limits>

namespace projconst {

/// SplitMix64 (Steele, Lea, Flood 2014). Seedable and splittable; satisfies
/// UniformRandomBitGenerator. Restart r of a run seeded with s draws from
/// SplitMix64::stream(s, r).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next(); }
  result_type next() noexcept;

  /// Independent child generator; advances this one by one step.
  SplitMix64 split() noexcept { return SplitMix64(mix(next())); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) noexcept;

 private:
  std::uint64_t state_;
};

/// Standard normal deviates by the Box–Muller transform; the second value of
/// each pair is cached for the next call.
class NormalSampler {
 public:
  double operator()(SplitMix64& rng) noexcept;

 private:
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace projconst
