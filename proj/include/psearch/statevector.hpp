#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "psearch/block_config.hpp"
#include "psearch/operators.hpp"

namespace psearch {

using Amplitude = std::complex<double>;

/// Largest N the dense backend accepts unless the caller raises the cap.
inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t{1} << 24;

/// Selects what a query does. `identity` replaces the oracle by the identity
/// map (the query is still counted), which is what hybrid trajectories need.
enum class OracleMode { marked, identity };

/// Dense amplitude vector over N addresses, optionally doubled by one ancilla
/// qubit. With the ancilla the layout is address-major: amplitude of
/// |b>|x> sits at index 2*x + b.
class DenseState {
 public:
  DenseState(std::vector<Amplitude> amplitudes, std::uint64_t n_addresses, bool has_ancilla,
             std::uint64_t queries = 0);

  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::uint64_t n_addresses() const { return n_; }
  bool has_ancilla() const { return ancilla_; }
  std::uint64_t queries() const { return queries_; }

  /// Amplitude of |b>|x>; branch must be 0 without an ancilla.
  Amplitude at(std::uint64_t x, int branch = 0) const;

  /// Squared magnitude of address x summed over ancilla branches.
  double address_probability(std::uint64_t x) const;

  double norm_squared() const;

  /// Same amplitudes with an ancilla attached in branch 0.
  DenseState with_ancilla() const;

 private:
  std::vector<Amplitude> amps_;
  std::uint64_t n_;
  bool ancilla_;
  std::uint64_t queries_;
};

DenseState uniform_state(std::uint64_t n, bool with_ancilla = false,
                         std::uint64_t dense_cap = kDefaultDenseCap);

DenseState invert_target(const DenseState& state, const BlockConfig& cfg,
                         OracleMode mode = OracleMode::marked);

DenseState global_diffusion(const DenseState& state);

DenseState block_diffusion(const DenseState& state, const BlockConfig& cfg);

/// Move-out M followed by inversion about the mean of ancilla branch 0.
/// Attaches the ancilla if the state does not carry one yet.
DenseState step3_transfer(const DenseState& state, const BlockConfig& cfg,
                          OracleMode mode = OracleMode::marked);

DenseState apply(const DenseState& state, const BlockConfig& cfg, OperatorTag op,
                 OracleMode mode = OracleMode::marked);

std::vector<double> block_probabilities(const DenseState& state, const BlockConfig& cfg);

/// Runs `script` from the uniform state.
DenseState run_dense(const BlockConfig& cfg, const PipelineScript& script,
                     std::uint64_t dense_cap = kDefaultDenseCap);

}  // namespace psearch
