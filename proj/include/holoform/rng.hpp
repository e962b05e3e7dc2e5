#pragma once

#include <random>

namespace holoform {

/// Uniform in [0, 1) from the top 53 bits of one engine draw. Unlike the
/// standard distributions this is the same on every library.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace holoform
