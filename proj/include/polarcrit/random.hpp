#pragma once

// Seeded draws. Everything goes through mt19937_64 with plain modulo
// reduction so streams are identical across standard libraries.

#include <cstdint>
#include <random>

namespace polarcrit {

using Rng = std::mt19937_64;

/// Independent stream for a sub-task; mixing follows splitmix64.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform in [lo, hi].
inline long draw_int(Rng& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

/// Uniform in [-bound, bound] \ {0}.
inline long draw_nonzero(Rng& rng, long bound) {
  long v = draw_int(rng, -bound, bound - 1);
  return v >= 0 ? v + 1 : v;
}

}  // namespace polarcrit
