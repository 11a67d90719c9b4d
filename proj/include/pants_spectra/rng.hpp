#pragma once

#include <cmath>
#include <cstdint>

namespace pants_spectra {

/**
 * @brief Deterministic 64-bit PRNG (SplitMix64).
 *
 * Hand-rolled on purpose: the standard library's distribution objects are
 * implementation-defined, which would break the bitwise-reproducibility
 * contract of the sweep harness across compilers.  SplitMix64 is fully
 * specified by its two mixing constants and passes BigCrush; it is more than
 * adequate for parameter sampling (we never need cryptographic quality).
 *
 * The u64 -> double conversion keeps the top 53 bits, producing a uniform
 * double in [0, 1) with a fixed, platform-independent bit pattern.
 */
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  /// Next 64 uniformly distributed bits.
  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), using the top 53 bits of next().
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Log-uniform double in [lo, hi]; requires 0 < lo <= hi.  The result is
  /// clamped so exp/log rounding can never step outside the interval.
  double log_uniform(double lo, double hi) noexcept {
    const double u = next_double();
    const double v = std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    return v < lo ? lo : (v > hi ? hi : v);
  }

 private:
  std::uint64_t state_;
};

/// Golden-ratio increment used to derive independent per-index substreams
/// (seed ^ kSeedStreamSalt * (index + 1)); the same constant SplitMix64 uses
/// internally, reused so substreams are decorrelated from the base stream.
inline constexpr std::uint64_t kSeedStreamSalt = 0x9E3779B97F4A7C15ULL;

/// Seed for the substream of item `index` under a user-facing base seed.
constexpr std::uint64_t substream_seed(std::uint64_t base_seed,
                                       std::uint64_t index) noexcept {
  return base_seed ^ (kSeedStreamSalt * (index + 1));
}

}  // namespace pants_spectra
