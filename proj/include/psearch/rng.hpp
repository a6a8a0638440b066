#pragma once

#include <cstdint>
#include <random>

namespace psearch {

// Seeded generator whose output sequence is identical across platforms and
// standard libraries. std::mt19937_64 is fully specified by the standard; the
// distributions in <random> are not, so the few we need live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard exponential variate.
  double exponential();

  /// Standard normal variate (Box-Muller, cosine branch only).
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Deterministic per-stream seed derived from (seed, stream) by SplitMix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace psearch
