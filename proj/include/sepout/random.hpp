#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace sepout {

/// Seeded 64-bit random stream with splittable substreams.
///
/// The core generator is splitmix64; substreams derive their own state and
/// increment from (seed, index), so a Monte Carlo run partitioned over K
/// substreams produces the same numbers no matter how the substreams are
/// scheduled across threads. All variate transforms are spelled out here
/// (no std::*_distribution) to keep results bit-identical across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed), gamma_(kGoldenGamma) {}

  /// Deterministic substream `index` of the family rooted at `seed`.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    RandomStream s(mix64(seed + kGoldenGamma * index));
    s.gamma_ = mix_gamma(seed ^ mix64(index + 0x8E9B5357A0C3D3F1ull));
    return s;
  }

  /// Deterministic child seed, for salting nested runs (one per group, say).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return mix64(seed + kGoldenGamma * (salt + 1));
  }

  std::uint64_t next_u64() { return mix64(state_ += gamma_); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential with the given mean (one uniform per draw).
  double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

  /// Standard normal via Box-Muller, cosine branch (two uniforms per draw).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

  // Stafford mix13 finalizer.
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Odd increment with enough bit transitions, as in SplittableRandom.
  static std::uint64_t mix_gamma(std::uint64_t z) {
    z = mix64(z) | 1ull;
    if (std::popcount(z ^ (z >> 1)) < 24) z ^= 0xAAAAAAAAAAAAAAAAull;
    return z;
  }

  std::uint64_t state_;
  std::uint64_t gamma_;
};

}  // namespace sepout
