#pragma once

// Shared helpers for the test suites: a fixed-seed RNG and generators for
// random points, specs, and tangent pairs.

#include <random>

#include "fabric/engine.hpp"

namespace fabric::testing {

inline std::mt19937_64 make_rng(uint64_t seed = 0x5eed5eedULL) {
  return std::mt19937_64{seed};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Point random_point(std::mt19937_64& rng, double extent = 5.0) {
  return Point{uniform(rng, -extent, extent), uniform(rng, -extent, extent)};
}

/// d and r in [0.1, 10], offsets uniform in the cell.
inline GridSpec random_spec(std::mt19937_64& rng) {
  const double d = uniform(rng, 0.1, 10.0);
  const double r = uniform(rng, 0.1, 10.0);
  return GridSpec::make(d, uniform(rng, 0.0, d), uniform(rng, 0.0, d), r);
}

/// The random draw plus the degenerate carrier placements the frame-curvature
/// case analysis distinguishes: on a line, on both lines, at a side midpoint,
/// at a cell center.
inline GridSpec spec_case(std::mt19937_64& rng, int index) {
  GridSpec s = random_spec(rng);
  switch (index) {
    case 0: return GridSpec::make(s.d, 0.0, s.ay, s.r);
    case 1: return GridSpec::make(s.d, s.ax, 0.0, s.r);
    case 2: return GridSpec::make(s.d, 0.0, 0.0, s.r);
    case 3: return GridSpec::make(s.d, 0.5 * s.d, 0.0, s.r);
    case 4: return GridSpec::make(s.d, 0.5 * s.d, 0.5 * s.d, s.r);
    default: return s;
  }
}

}  // namespace fabric::testing
