#pragma once

#include <cstdint>

namespace domfix {

// splitmix64 stream. Used instead of <random> engines plus distributions so
// that seeded runs produce the same bytes on every platform and stdlib.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) via 128-bit multiply-shift.
  uint64_t bounded(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next()) * bound) >> 64);
  }

 private:
  uint64_t state_;
};

}  // namespace domfix
