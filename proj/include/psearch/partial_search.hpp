#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "psearch/analysis.hpp"
#include "psearch/block_config.hpp"
#include "psearch/operators.hpp"
#include "psearch/statevector.hpp"

namespace psearch {

enum class Backend { dense, reduced };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view name);

/// How the angle left after Step 1 feeds theta1/theta2.
/// asymptotic: theta = (pi/2) eps, as in the cost calculus.
/// exact: theta = pi/2 - (2 l1 + 1) arcsin(1/sqrt N), the true post-Step-1 angle.
enum class ThetaMode { asymptotic, exact };

struct IterationPlan {
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  CostBreakdown breakdown;
};

/// l1 = round((pi/4)(1 - eps) sqrt N), l2 = round(sqrt(N/K)/2 (theta1 + theta2)).
/// Throws Infeasible when (eps, K) violates an arcsin bound.
IterationPlan iteration_counts(std::uint64_t n, std::uint64_t k, double epsilon,
                               ThetaMode mode = ThetaMode::asymptotic);

struct RunOptions {
  Backend backend = Backend::reduced;
  std::uint64_t dense_cap = kDefaultDenseCap;
  ThetaMode theta_mode = ThetaMode::asymptotic;
};

struct RunReport {
  std::uint64_t queries = 0;
  std::vector<double> block_probs;
  double success_prob = 0.0;  // mass on the target block
  double target_prob = 0.0;   // mass on the target address
  std::uint64_t predicted_block = 0;
  Backend backend = Backend::reduced;
  std::optional<double> epsilon;
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t target = 0;
};

RunReport make_report(const DenseState& state, const BlockConfig& cfg);

RunReport run_partial_search(const BlockConfig& cfg, double epsilon,
                             const RunOptions& options = {});

RunReport run_full_grover(const BlockConfig& cfg, std::uint64_t steps,
                          const RunOptions& options = {});

RunReport run_script(const BlockConfig& cfg, const PipelineScript& script,
                     const RunOptions& options = {});

/// Grover iterations that maximize the target probability: round((pi/4) sqrt N).
std::uint64_t grover_optimal_steps(std::uint64_t n);

}  // namespace psearch
