// Deterministic seeded randomness. splitmix64 is used instead of <random>
// engines/distributions because its output is reproducible bit-for-bit
// across platforms and standard library implementations.
#pragma once

#include <cstdint>

#include "ordercone/rational.hpp"

namespace ordercone {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // In [0, bound); bound > 0. Plain modulo; the draws feed instance
  // generation, not statistics.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Small rationals: numerators in [num_lo, num_hi], denominators in
// [1, den_max]. Keeps LP pivot growth manageable while still exercising
// non-integer data.
struct RationalSampler {
  SplitMix64 rng;
  std::int64_t num_lo = -9;
  std::int64_t num_hi = 9;
  std::int64_t den_max = 3;

  explicit RationalSampler(std::uint64_t seed) : rng(seed) {}

  Rational draw() {
    const std::int64_t span = num_hi - num_lo + 1;
    const std::int64_t num = num_lo + static_cast<std::int64_t>(rng.below(span));
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(den_max));
    return Rational(num, den);
  }

  Rational draw_nonneg() {
    const std::int64_t hi = num_hi > 0 ? num_hi : 0;
    const std::int64_t num = static_cast<std::int64_t>(rng.below(hi + 1));
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(den_max));
    return Rational(num, den);
  }
};

}  // namespace ordercone
