#pragma once

// Deterministic pseudo-random sampling (splitmix64).  Every randomized
// check in the library and test suite draws from a fixed-seed stream, so
// runs are reproducible byte for byte.

#include <cstdint>

namespace alcove {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }
};

} // namespace alcove
