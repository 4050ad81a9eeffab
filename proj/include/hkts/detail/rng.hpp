#pragma once

#include <cstdint>

namespace hkts::detail {

/// splitmix64; used for seed mixing and stream derivation so per-partition
/// randomness depends only on (seed, level, index).
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool next_bool() { return (next() & 1ULL) != 0; }
};

inline uint64_t mix_stream(uint64_t seed, uint64_t a, uint64_t b) {
  SplitMix64 s(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xd1b54a32d192ed03ULL));
  s.next();
  return s.next();
}

}  // namespace hkts::detail
