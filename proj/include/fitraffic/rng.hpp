#pragma once

#include <cstdint>
#include <random>

namespace fitraffic {

// Random streams are std::mt19937_64, whose output sequence for a given
// seed is fixed by the C++ standard. Bounded integers and unit reals are
// derived here rather than through <random> distributions, whose outputs
// are implementation-defined, so runs are bit-reproducible across
// platforms.
using Engine = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of run `index` under `master_seed`. Depends only on the pair, so
/// ensemble members can be generated in any order or in parallel.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return mix64(master_seed ^ mix64(index + 0x5851F42D4C957F2DULL));
}

/// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

/// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace fitraffic
