#pragma once

#include <array>
#include <cstdint>

namespace hyperavg {

// SplitMix64 (Steele, Lea & Flood's published constants): used to expand seeds
// into generator state and to derive independent per-trial streams. The k-th
// output for a given seed is finalize(seed + (k+1)*GAMMA), computable in O(1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return finalize(state_);
  }

  // k-th output (0-based) of the stream for `seed`, without advancing.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t k) {
    return finalize(seed + (k + 1) * kGamma);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

// xoshiro256++ (Blackman & Vigna). State is seeded from four consecutive
// SplitMix64 outputs, per the authors' recommendation. Deterministic and
// platform-independent; reference outputs are pinned in the test suite.
class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased uniform draw from {0, ..., bound-1} by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t reject_below = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= reject_below) return r % bound;
    }
  }

  // Uniform in [-1, 1): 53 random bits scaled, then affinely mapped.
  double next_symmetric() {
    return 2.0 * ((next() >> 11) * 0x1.0p-53) - 1.0;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_;
};

// Independent stream for trial k of a multi-trial run: the trial generator is
// seeded with the k-th SplitMix64 output of the master seed, so sequential
// and parallel execution see identical randomness.
inline Xoshiro256PlusPlus stream_for_trial(std::uint64_t master_seed, std::uint64_t trial) {
  return Xoshiro256PlusPlus(SplitMix64::at(master_seed, trial));
}

// Reserved stream tag for deriving weight vectors and other one-off draws
// without colliding with trial streams (trial indices stay below 2^40).
inline constexpr std::uint64_t kWeightsStreamTag = 1ULL << 40;

}  // namespace hyperavg
