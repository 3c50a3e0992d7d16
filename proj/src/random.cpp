#include "weft/random.hpp"

#include <cmath>

namespace weft {

namespace {

std::uint64_t poisson_inversion(Rng& rng, double mean) {
  double p = std::exp(-mean);
  double cumulative = p;
  const double u = uniform01(rng);
  std::uint64_t x = 0;
  // The cap guards against rounding leaving `cumulative` just below u.
  while (u > cumulative && x < 1000) {
    ++x;
    p *= mean / static_cast<double>(x);
    cumulative += p;
  }
  return x;
}

// Hörmann's PTRS transformed rejection sampler.
std::uint64_t poisson_ptrs(Rng& rng, double mean) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2);
  for (;;) {
    const double u = uniform01(rng) - 0.5;
    const double v = uniform01(rng);
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - std::lgamma(k + 1)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace

std::uint64_t poisson(Rng& rng, double mean) {
  if (!(mean > 0)) return 0;
  return mean < 30 ? poisson_inversion(rng, mean) : poisson_ptrs(rng, mean);
}

}  // namespace weft
