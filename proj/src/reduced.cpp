#include "psearch/reduced.hpp"

#include <cmath>
#include <string>

#include "psearch/errors.hpp"

namespace psearch {
namespace {

struct Populations {
  double n;             // N
  double in_block;      // N/K
  double block_others;  // N/K - 1
  double outside;       // N - N/K
};

Populations populations(const BlockConfig& cfg) {
  const auto n = cfg.n_addresses();
  const auto size = cfg.block_size();
  return {static_cast<double>(n), static_cast<double>(size), static_cast<double>(size - 1),
          static_cast<double>(n - size)};
}

}  // namespace

double ReducedState::norm_squared() const {
  const auto p = populations(cfg);
  return a * a + p.block_others * b * b + p.outside * c * c + d * d;
}

double ReducedState::target_block_probability() const {
  const auto p = populations(cfg);
  return a * a + p.block_others * b * b + d * d;
}

ReducedState reduced_init(const BlockConfig& cfg) {
  if (cfg.n_addresses() < 2) throw InvalidInstance("need N >= 2 addresses");
  if (cfg.n_addresses() > kReducedCap)
    throw InvalidInstance("N=" + std::to_string(cfg.n_addresses()) +
                          " exceeds the reduced backend limit of 2^52");
  const double amp = 1.0 / std::sqrt(static_cast<double>(cfg.n_addresses()));
  return ReducedState{amp, amp, amp, 0.0, cfg, 0, false};
}

ReducedState reduced_apply(const ReducedState& state, OperatorTag op) {
  const auto p = populations(state.cfg);
  ReducedState next = state;
  switch (op) {
    case OperatorTag::oracle:
      next.a = -state.a;
      next.d = -state.d;
      ++next.queries;
      break;
    case OperatorTag::global_diffusion: {
      if (state.moved_out)
        throw ContractViolation("global_diffusion is defined on the address register only");
      const double twice_mean =
          2.0 * (state.a + p.block_others * state.b + p.outside * state.c) / p.n;
      next.a = twice_mean - state.a;
      next.b = twice_mean - state.b;
      next.c = twice_mean - state.c;
      break;
    }
    case OperatorTag::block_diffusion: {
      if (state.moved_out)
        throw ContractViolation("block_diffusion is defined on the address register only");
      // Non-target blocks are uniform, hence fixed by their own inversion.
      const double twice_mean = 2.0 * (state.a + p.block_others * state.b) / p.in_block;
      next.a = twice_mean - state.a;
      next.b = twice_mean - state.b;
      break;
    }
    case OperatorTag::step3: {
      if (state.moved_out || state.d != 0.0)
        throw ContractViolation("step3 requires an empty moved-out branch");
      const double twice_mean = 2.0 * (p.block_others * state.b + p.outside * state.c) / p.n;
      next.d = state.a;
      next.a = twice_mean;
      next.b = twice_mean - state.b;
      next.c = twice_mean - state.c;
      next.moved_out = true;
      ++next.queries;
      break;
    }
  }
  return next;
}

ReducedState run_reduced(const BlockConfig& cfg, const PipelineScript& script) {
  ReducedState state = reduced_init(cfg);
  for (auto op : script) state = reduced_apply(state, op);
  return state;
}

std::vector<double> block_probabilities(const ReducedState& state) {
  const auto p = populations(state.cfg);
  std::vector<double> probs(state.cfg.n_blocks(), p.in_block * state.c * state.c);
  probs[state.cfg.target_block()] = state.target_block_probability();
  return probs;
}

DenseState lift_to_dense(const ReducedState& state, std::uint64_t dense_cap) {
  const auto& cfg = state.cfg;
  const auto n = cfg.n_addresses();
  if (n > dense_cap)
    throw InvalidInstance("N=" + std::to_string(n) + " exceeds the dense backend cap of " +
                          std::to_string(dense_cap));
  const bool ancilla = state.moved_out;
  const std::uint64_t stride = ancilla ? 2 : 1;
  std::vector<Amplitude> amps(stride * n);
  const auto y_t = cfg.target_block();
  for (std::uint64_t x = 0; x < n; ++x) {
    const double value = x == cfg.target()       ? state.a
                         : cfg.block_of(x) == y_t ? state.b
                                                  : state.c;
    amps[stride * x] = Amplitude{value, 0.0};
  }
  if (ancilla) amps[2 * cfg.target() + 1] = Amplitude{state.d, 0.0};
  return DenseState(std::move(amps), n, ancilla, state.queries);
}

}  // namespace psearch
