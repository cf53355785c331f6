#pragma once

#include <cstdint>
#include <random>

namespace linthresh::sim {

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Per-replication stream. The seed depends only on (base_seed, rep_index),
/// so replications can be generated in any order or on any thread.
///
/// Engine: std::mt19937_64 (output fully specified by the standard).
/// Uniforms take the top 53 bits; normals use the cosine branch of
/// Box-Muller. Neither depends on library-specific distribution code, so
/// streams match across platforms.
class ReplicationRng {
 public:
  ReplicationRng(std::uint64_t base_seed, std::uint64_t rep_index)
      : engine_(splitmix64(splitmix64(base_seed) ^ rep_index)) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal; consumes exactly two uniforms.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace linthresh::sim
