#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace flabench {

// Splittable counter-based generator (SplitMix64 state walk with a
// per-stream gamma, after Steele et al.'s SplittableRandom).
//
// Identical seed + identical call sequence gives an identical stream.
// split() derives an independent child stream deterministically, so
// per-channel augmentation draws stay reproducible regardless of which
// subsystem owns which stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed), gamma_(kDefaultGamma) {}

  uint64_t next_u64() {
    state_ += gamma_;
    return mix64(state_);
  }

  // 53-bit uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // One draw; true with probability p (p <= 0 never, p >= 1 always).
  bool bernoulli(double p) { return next_double() < p; }

  // Uniform integer in [0, n), n > 0. Multiply-shift map; bias is O(n/2^64).
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Box-Muller, one value per call (the sine branch is discarded so the
  // draw count per call is fixed at two).
  double normal(double mean, double stddev) {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * (r * std::cos(2.0 * std::numbers::pi * u2));
  }

  Rng split() {
    const uint64_t seed = next_u64();
    const uint64_t gamma = mix_gamma(next_u64());
    return Rng(seed, gamma);
  }

 private:
  Rng(uint64_t state, uint64_t gamma) : state_(state), gamma_(gamma) {}

  static constexpr uint64_t kDefaultGamma = 0x9E3779B97F4A7C15ull;

  static uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Gammas must be odd and not too regular (SplittableRandom's fixup).
  static uint64_t mix_gamma(uint64_t z) {
    z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
    z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
    z = (z ^ (z >> 33)) | 1ull;
    if (__builtin_popcountll(z ^ (z >> 1)) < 24) z ^= 0xAAAAAAAAAAAAAAAAull;
    return z;
  }

  uint64_t state_;
  uint64_t gamma_;
};

}  // namespace flabench
