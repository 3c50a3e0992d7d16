#pragma once

#include <cstdint>
#include <random>

namespace weft {

/// Engine used by all generators. The samplers below are defined here rather
/// than taken from <random> because the standard distributions are
/// implementation-defined, and generated layers must be identical for a given
/// seed on every platform.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

/// Poisson(mean) variate: sequential inversion below mean 30, PTRS
/// transformed rejection above.
std::uint64_t poisson(Rng& rng, double mean);

}  // namespace weft
