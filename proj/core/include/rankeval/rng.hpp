#pragma once

#include <cstdint>

namespace rankeval {

/// Counter-friendly 64-bit generator (splitmix64).  Every consumer derives
/// its own stream from (seed, tag, index), so results never depend on how
/// work is split across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [0, bound), bound >= 1.  Rejection sampling on the
  /// top of the range keeps the draw exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

/// Derives an independent substream key from up to three components.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t tag,
                                std::uint64_t index = 0) {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (tag + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (index + 0x94d049bb133111ebULL));
  return h;
}

}  // namespace rankeval
