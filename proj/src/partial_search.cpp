#include "psearch/partial_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "psearch/errors.hpp"
#include "psearch/reduced.hpp"

namespace psearch {
namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t round_count(double x) { return static_cast<std::uint64_t>(std::llround(x)); }

RunReport finish(std::vector<double> block_probs, double target_prob, const BlockConfig& cfg,
                 std::uint64_t queries, Backend backend) {
  RunReport r;
  r.queries = queries;
  r.success_prob = block_probs[cfg.target_block()];
  r.target_prob = target_prob;
  r.predicted_block = static_cast<std::uint64_t>(
      std::max_element(block_probs.begin(), block_probs.end()) - block_probs.begin());
  r.block_probs = std::move(block_probs);
  r.backend = backend;
  r.n = cfg.n_addresses();
  r.k = cfg.n_blocks();
  r.target = cfg.target();
  return r;
}

RunReport execute(const BlockConfig& cfg, const PipelineScript& script,
                  const RunOptions& options) {
  if (options.backend == Backend::dense) {
    return make_report(run_dense(cfg, script, options.dense_cap), cfg);
  }
  const ReducedState state = run_reduced(cfg, script);
  return finish(block_probabilities(state), state.target_probability(), cfg, state.queries,
                Backend::reduced);
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::dense ? "dense" : "reduced";
}

Backend parse_backend(std::string_view name) {
  if (name == "dense") return Backend::dense;
  if (name == "reduced") return Backend::reduced;
  throw InvalidInstance("unknown backend '" + std::string(name) + "' (expected dense or reduced)");
}

IterationPlan iteration_counts(std::uint64_t n, std::uint64_t k, double epsilon, ThetaMode mode) {
  if (k < 2) throw InvalidInstance("partial search needs K >= 2 blocks");
  if (k > n || n % k != 0)
    throw InvalidInstance("K=" + std::to_string(k) + " does not divide N=" + std::to_string(n));
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw InvalidInstance("epsilon must lie in [0, 1] (got " + std::to_string(epsilon) + ")");

  const double root_n = std::sqrt(static_cast<double>(n));
  IterationPlan plan;
  plan.l1 = round_count(kPi / 4.0 * (1.0 - epsilon) * root_n);

  double theta = theta_of_epsilon(epsilon);
  if (mode == ThetaMode::exact) {
    const double beta = std::asin(1.0 / root_n);
    theta = std::clamp(kPi / 2.0 - (2.0 * static_cast<double>(plan.l1) + 1.0) * beta, 0.0,
                       kPi / 2.0);
  }
  const int kk = static_cast<int>(k);
  // theta1/theta2 throw with the violated bound named.
  const double t1 = theta1(theta, kk);
  const double t2 = theta2(theta, kk);
  plan.breakdown = cost_at_theta(epsilon, theta, kk);
  plan.breakdown.theta1 = t1;
  plan.breakdown.theta2 = t2;
  plan.l2 = round_count(std::sqrt(static_cast<double>(n / k)) / 2.0 * (t1 + t2));
  return plan;
}

RunReport make_report(const DenseState& state, const BlockConfig& cfg) {
  return finish(block_probabilities(state, cfg), state.address_probability(cfg.target()), cfg,
                state.queries(), Backend::dense);
}

RunReport run_partial_search(const BlockConfig& cfg, double epsilon, const RunOptions& options) {
  const auto plan =
      iteration_counts(cfg.n_addresses(), cfg.n_blocks(), epsilon, options.theta_mode);
  RunReport report = execute(cfg, partial_search_script(plan.l1, plan.l2), options);
  report.epsilon = epsilon;
  report.l1 = plan.l1;
  report.l2 = plan.l2;
  return report;
}

RunReport run_full_grover(const BlockConfig& cfg, std::uint64_t steps, const RunOptions& options) {
  RunReport report = execute(cfg, grover_script(steps), options);
  report.l1 = steps;
  return report;
}

RunReport run_script(const BlockConfig& cfg, const PipelineScript& script,
                     const RunOptions& options) {
  return execute(cfg, script, options);
}

std::uint64_t grover_optimal_steps(std::uint64_t n) {
  return round_count(kPi / 4.0 * std::sqrt(static_cast<double>(n)));
}

}  // namespace psearch
