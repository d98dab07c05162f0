#pragma once

#include <cstdint>
#include <random>

namespace vrank {

// All randomness goes through std::mt19937_64, whose output sequence is fixed
// by the C++ standard. The two derived draws below are spelled out instead of
// using <random> distributions, whose results vary between standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection: draws r until
/// r < 2^64 - (2^64 mod bound), then returns r mod bound.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = -(-bound % bound);  // 2^64 - (2^64 mod bound), 0 if bound | 2^64
  for (;;) {
    const std::uint64_t r = rng();
    if (limit == 0 || r < limit) return r % bound;
  }
}

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace vrank
