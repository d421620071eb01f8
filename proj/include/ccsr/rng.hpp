#pragma once

#include <cstdint>
#include <random>

namespace ccsr {

/// SplitMix64 step; used to derive independent per-trial seeds from a batch
/// seed so that work partitioning never changes the stream a trial sees.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

/// mt19937_64 wrapper producing portable doubles. std::uniform_real_distribution
/// is not bit-stable across standard libraries, so uniforms are built directly
/// from the (standardized) engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit mantissa.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // modulo bias is negligible for n << 2^64 (largest n used here ~ 10^6)
    return engine_() % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccsr
