#pragma once

#include <cstdint>
#include <vector>

#include "psearch/block_config.hpp"
#include "psearch/operators.hpp"
#include "psearch/statevector.hpp"

namespace psearch {

/// Largest N the reduced backend accepts: N enters only through doubles, and
/// 2^52 is where consecutive integers stop being exactly representable as
/// sums of the block populations.
inline constexpr std::uint64_t kReducedCap = std::uint64_t{1} << 52;

/// Block-symmetric state. Every operator in OperatorTag commutes with
/// permutations that fix the target and preserve blocks, so starting from the
/// uniform state the register is described by four reals:
///   a  target amplitude (ancilla branch 0)
///   b  each of the N/K - 1 other addresses in the target block
///   c  each of the N - N/K addresses outside the target block
///   d  target amplitude in ancilla branch 1 (zero until step3)
struct ReducedState {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  BlockConfig cfg;
  std::uint64_t queries = 0;
  bool moved_out = false;

  /// a^2 + (N/K - 1) b^2 + (N - N/K) c^2 + d^2
  double norm_squared() const;

  /// Amplitude mass on the target block (both branches).
  double target_block_probability() const;

  double target_probability() const { return a * a + d * d; }
};

ReducedState reduced_init(const BlockConfig& cfg);

/// Throws ContractViolation for a second step3.
ReducedState reduced_apply(const ReducedState& state, OperatorTag op);

ReducedState run_reduced(const BlockConfig& cfg, const PipelineScript& script);

std::vector<double> block_probabilities(const ReducedState& state);

/// Expands to the equivalent dense state; the ancilla is attached iff step3 ran.
DenseState lift_to_dense(const ReducedState& state, std::uint64_t dense_cap = kDefaultDenseCap);

}  // namespace psearch
