#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sompkit {

/// splitmix64 finalizer; the seed-mixing primitive used everywhere.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Stated per-trial seed derivation: two chained splitmix64 rounds over
/// (base, a, b). Reproducing it bit-exactly reproduces every draw.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = mix64(base ^ (0x9E3779B97F4A7C15ULL * (a + 1)));
  return mix64(h ^ (0xBF58476D1CE4E5B9ULL * (b + 1)));
}

/// Seedable deterministic generator: mt19937_64 for bits (bit-exact by
/// the C++ standard), uniforms from the top 53 bits, and gaussians via
/// Box-Muller so that no platform-dependent library sampler is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal. Box-Muller on (0,1] x [0,1) uniforms; the second
  /// variate of each pair is cached and returned on the next call.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform integer in [0, bound), unbiased via rejection.
  int uniform_int(int bound) {
    const std::uint64_t n = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % n);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sompkit
