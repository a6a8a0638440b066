#include "psearch/statevector.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "psearch/errors.hpp"

namespace psearch {
namespace {

constexpr double kNormTolerance = 1e-9;

void require_same_n(const DenseState& state, const BlockConfig& cfg) {
  if (state.n_addresses() != cfg.n_addresses())
    throw InvalidInstance("state has N=" + std::to_string(state.n_addresses()) +
                          " but instance has N=" + std::to_string(cfg.n_addresses()));
}

std::vector<Amplitude> copy_amplitudes(const DenseState& state) {
  auto amps = state.amplitudes();
  return {amps.begin(), amps.end()};
}

// In-place x -> 2m - x over amps[first], amps[first + stride], ... (count entries).
void invert_about_mean(std::vector<Amplitude>& amps, std::size_t first, std::size_t stride,
                       std::size_t count) {
  Amplitude sum{0.0, 0.0};
  for (std::size_t i = 0; i < count; ++i) sum += amps[first + i * stride];
  const Amplitude twice_mean = 2.0 * sum / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& a = amps[first + i * stride];
    a = twice_mean - a;
  }
}

}  // namespace

DenseState::DenseState(std::vector<Amplitude> amplitudes, std::uint64_t n_addresses,
                       bool has_ancilla, std::uint64_t queries)
    : amps_(std::move(amplitudes)), n_(n_addresses), ancilla_(has_ancilla), queries_(queries) {
  const std::uint64_t expected = has_ancilla ? 2 * n_ : n_;
  if (amps_.size() != expected)
    throw InvalidInstance("amplitude vector has length " + std::to_string(amps_.size()) +
                          ", expected " + std::to_string(expected));
  const double norm = norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw InvalidInstance("state is not normalized (squared norm " + std::to_string(norm) + ")");
}

Amplitude DenseState::at(std::uint64_t x, int branch) const {
  if (!ancilla_) {
    if (branch != 0) throw ContractViolation("state has no ancilla branch 1");
    return amps_[x];
  }
  return amps_[2 * x + static_cast<std::uint64_t>(branch)];
}

double DenseState::address_probability(std::uint64_t x) const {
  if (!ancilla_) return std::norm(amps_[x]);
  return std::norm(amps_[2 * x]) + std::norm(amps_[2 * x + 1]);
}

double DenseState::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                         [](double acc, const Amplitude& a) { return acc + std::norm(a); });
}

DenseState DenseState::with_ancilla() const {
  if (ancilla_) return *this;
  std::vector<Amplitude> doubled(2 * n_);
  for (std::uint64_t x = 0; x < n_; ++x) doubled[2 * x] = amps_[x];
  return DenseState(std::move(doubled), n_, true, queries_);
}

DenseState uniform_state(std::uint64_t n, bool with_ancilla, std::uint64_t dense_cap) {
  if (n < 2) throw InvalidInstance("need N >= 2 addresses (got " + std::to_string(n) + ")");
  if (n > dense_cap)
    throw InvalidInstance("N=" + std::to_string(n) + " exceeds the dense backend cap of " +
                          std::to_string(dense_cap) + "; use the reduced backend");
  const Amplitude amp{1.0 / std::sqrt(static_cast<double>(n)), 0.0};
  if (!with_ancilla) return DenseState(std::vector<Amplitude>(n, amp), n, false);
  std::vector<Amplitude> amps(2 * n);
  for (std::uint64_t x = 0; x < n; ++x) amps[2 * x] = amp;
  return DenseState(std::move(amps), n, true);
}

DenseState invert_target(const DenseState& state, const BlockConfig& cfg, OracleMode mode) {
  require_same_n(state, cfg);
  auto amps = copy_amplitudes(state);
  if (mode == OracleMode::marked) {
    const auto t = cfg.target();
    if (state.has_ancilla()) {
      amps[2 * t] = -amps[2 * t];
      amps[2 * t + 1] = -amps[2 * t + 1];
    } else {
      amps[t] = -amps[t];
    }
  }
  return DenseState(std::move(amps), state.n_addresses(), state.has_ancilla(),
                    state.queries() + 1);
}

DenseState global_diffusion(const DenseState& state) {
  if (state.has_ancilla())
    throw ContractViolation("global_diffusion is defined on the address register only");
  auto amps = copy_amplitudes(state);
  invert_about_mean(amps, 0, 1, amps.size());
  return DenseState(std::move(amps), state.n_addresses(), false, state.queries());
}

DenseState block_diffusion(const DenseState& state, const BlockConfig& cfg) {
  require_same_n(state, cfg);
  if (state.has_ancilla())
    throw ContractViolation("block_diffusion is defined on the address register only");
  auto amps = copy_amplitudes(state);
  const auto size = cfg.block_size();
  for (std::uint64_t y = 0; y < cfg.n_blocks(); ++y) invert_about_mean(amps, y * size, 1, size);
  return DenseState(std::move(amps), state.n_addresses(), false, state.queries());
}

DenseState step3_transfer(const DenseState& state, const BlockConfig& cfg, OracleMode mode) {
  require_same_n(state, cfg);
  const DenseState input = state.with_ancilla();
  auto amps = copy_amplitudes(input);
  const auto t = cfg.target();
  if (mode == OracleMode::marked) {
    if (amps[2 * t + 1] != Amplitude{0.0, 0.0})
      throw ContractViolation("step3 requires an empty ancilla branch 1 at the target");
    std::swap(amps[2 * t], amps[2 * t + 1]);
  }
  invert_about_mean(amps, 0, 2, cfg.n_addresses());
  return DenseState(std::move(amps), input.n_addresses(), true, input.queries() + 1);
}

DenseState apply(const DenseState& state, const BlockConfig& cfg, OperatorTag op,
                 OracleMode mode) {
  switch (op) {
    case OperatorTag::oracle: return invert_target(state, cfg, mode);
    case OperatorTag::global_diffusion: return global_diffusion(state);
    case OperatorTag::block_diffusion: return block_diffusion(state, cfg);
    case OperatorTag::step3: return step3_transfer(state, cfg, mode);
  }
  throw ContractViolation("unknown operator");
}

std::vector<double> block_probabilities(const DenseState& state, const BlockConfig& cfg) {
  require_same_n(state, cfg);
  std::vector<double> probs(cfg.n_blocks(), 0.0);
  for (std::uint64_t x = 0; x < cfg.n_addresses(); ++x)
    probs[cfg.block_of(x)] += state.address_probability(x);
  return probs;
}

DenseState run_dense(const BlockConfig& cfg, const PipelineScript& script,
                     std::uint64_t dense_cap) {
  DenseState state = uniform_state(cfg.n_addresses(), false, dense_cap);
  for (auto op : script) state = apply(state, cfg, op);
  return state;
}

}  // namespace psearch
