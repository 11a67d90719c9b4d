#pragma once

#include <cmath>

namespace test_util {

/// Relative error |a - b| / max(|b|, floor); floor guards values near zero.
[[nodiscard]] inline double rel_err(double a, double b,
                                    double floor = 1e-300) {
  const double scale = std::fmax(std::fabs(b), floor);
  return std::fabs(a - b) / scale;
}

/// Deterministic 64-bit generator for test sampling (same scheme the
/// library uses, duplicated here so tests do not depend on library RNG
/// internals).
class TestRng {
 public:
  explicit constexpr TestRng(unsigned long long seed) : state_(seed) {}

  constexpr unsigned long long next() {
    state_ += 0x9E3779B97F4A7C15ull;
    unsigned long long z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Log-uniform draw on [lo, hi], clamped against rounding overshoot.
  double log_uniform(double lo, double hi) {
    const double u = next_double();
    const double v = std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    return v < lo ? lo : (v > hi ? hi : v);
  }

 private:
  unsigned long long state_;
};

}  // namespace test_util
