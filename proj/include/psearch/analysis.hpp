#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace psearch {

/// Arcsin arguments in (1, 1 + kArcsinClamp] are treated as exactly 1.
inline constexpr double kArcsinClamp = 1e-12;

/// Everything the query-count calculation produces for one (epsilon, K).
struct CostBreakdown {
  double epsilon = 0.0;
  int k = 0;
  double theta = 0.0;    // angle left after Step 1, (pi/2) * epsilon
  double alpha_t = 1.0;  // weight of the target block after Step 1
  double theta1 = 0.0;   // block state to target, before Step 2
  double theta2 = 0.0;   // overshoot past the target, after Step 2
  bool feasible = false;
  std::optional<double> coefficient;  // queries / sqrt(N), set iff feasible
};

struct EpsilonOptimum {
  double epsilon = 0.0;
  double coefficient = 0.0;
};

struct BoundsRow {
  int k = 0;
  double epsilon_star = 0.0;
  double upper_coeff = 0.0;
  double lower_coeff = 0.0;
  double naive_coeff = 0.0;
};

/// Remaining angle after Step 1 under the (pi/2) * epsilon convention.
double theta_of_epsilon(double epsilon);

double alpha_target(double theta, int k);

/// Throws Infeasible if the arcsin argument exceeds 1 beyond the clamp.
double theta1(double theta, int k);

/// Throws Infeasible when sin(theta) > 2 / sqrt(K).
double theta2(double theta, int k);

/// Breakdown at an explicit remaining angle theta (used by the exact-angle mode).
CostBreakdown cost_at_theta(double epsilon, double theta, int k);

/// (pi/4)(1 - eps) + (theta1 + theta2) / (2 sqrt K). Infeasibility is reported
/// in the result, never thrown.
CostBreakdown cost_coefficient(double epsilon, int k);

/// Right edge of the feasible epsilon interval [0, edge].
double max_feasible_epsilon(int k);

/// Grid scan at 1e-4 over the feasible interval, then golden-section
/// refinement around the best grid point down to `tol`. Ties within `tol`
/// resolve to the smallest epsilon.
EpsilonOptimum optimize_epsilon(int k, double tol = 1e-9);

/// Golden-section minimizer of a unimodal f on [lo, hi]; returns the argmin.
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

/// (pi/4)(1 - 1/sqrt K): no partial-search algorithm can do better.
double lower_bound_coefficient(int k);

/// 1 - (2/pi) arcsin(pi/4), about 0.4249.
double large_k_constant();

/// (pi/4)(1 - large_k_constant() / sqrt K), the epsilon = 1/sqrt K estimate.
double large_k_guarantee(int k);

/// Plain Grover restricted to K-1 random blocks: (pi/4) sqrt((K-1)/K).
double naive_quantum_coefficient(int k);

/// Full search by repeated partial search: alpha sqrt(N) sqrt(K) / (sqrt(K) - 1).
double reduction_total_queries(double alpha_coeff, int k, std::uint64_t n);

std::vector<BoundsRow> build_table(const std::vector<int>& ks, double tol = 1e-9);

}  // namespace psearch
