#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ineq {

/// Reproducible sampling. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; distributions are computed here rather
/// than through <random> distribution objects, whose algorithms are
/// implementation-defined.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// exp(U(ln lo, ln hi)).
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-trial seeds so that work
/// partitioned by trial index is schedule-independent.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Default range for mean-axiom sampling.
inline constexpr double kSampleLo = 1e-3;
inline constexpr double kSampleHi = 1e3;

}  // namespace ineq
