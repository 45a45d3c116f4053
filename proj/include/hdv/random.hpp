#pragma once

// Seeded random number generation with a reproducibility contract: the same
// seed and the same call sequence produce bit-identical results on every
// platform. Distributions are implemented here instead of <random> because
// the standard leaves their output unspecified across library vendors.

#include <cstdint>
#include <vector>

#include "hdv/hypervector.hpp"

namespace hdv {

/// 64-bit seed value. Identical seed + identical call sequence gives
/// bit-identical outputs.
using Seed = std::uint64_t;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace detail

/// xoshiro256** generator seeded through splitmix64. Not thread-safe; callers
/// split() per task instead of sharing one handle.
class Rng {
 public:
  explicit Rng(Seed seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) s = detail::splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Fair coin as +1.0f / -1.0f, consuming one bit per call.
  float bipolar() {
    if (bits_left_ == 0) {
      bit_buffer_ = next_u64();
      bits_left_ = 64;
    }
    const bool b = (bit_buffer_ & 1u) != 0;
    bit_buffer_ >>= 1;
    --bits_left_;
    return b ? 1.0f : -1.0f;
  }

  /// Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Standard normal via Box-Muller, one spare cached.
  double gaussian();

  /// Derives an independent child generator; advances this one.
  Rng split() { return Rng(next_u64() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_[4]{};
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
  double gaussian_spare_ = 0.0;
  bool has_gaussian_spare_ = false;
};

/// Uniform random bipolar hypervector.
Hypervector random_bipolar(std::size_t dim, Rng& rng);

/// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(values[i - 1], values[j]);
  }
}

}  // namespace hdv
