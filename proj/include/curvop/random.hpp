#pragma once

#include <cstdint>
#include <random>

namespace curvop {

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Spelled out so results do not depend on the standard library's
/// distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_pm1(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

}  // namespace curvop
