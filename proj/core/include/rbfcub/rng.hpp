#pragma once

#include <cstdint>
#include <random>

namespace rbfcub {

/// splitmix64 finalizer (Steele, Lea, Flood 2014). Used to derive independent
/// substreams from a master seed so that per-trial draws are reproducible and
/// platform-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

/// Uniform double in [0,1) from the top 53 bits of a raw draw. We avoid
/// std::uniform_real_distribution because its output is not pinned by the
/// standard across implementations; this construction is.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace rbfcub
