#pragma once

#include <cstdint>
#include <vector>

#include "psearch/block_config.hpp"
#include "psearch/operators.hpp"
#include "psearch/statevector.hpp"

namespace psearch {

/// arccos |<v|w>|, a metric on unit states with values in [0, pi/2].
/// Throws InvalidInstance if either input is off unit norm by more than 1e-6
/// or the shapes differ.
double angle_distance(const DenseState& v, const DenseState& w);

struct ErrorBound {
  double queries = 0.0;         // lower bound on T, floored at 0
  bool regime_warning = false;  // N < 100 or err > 0.1
};

/// (pi/4) sqrt(N) (1 - C (sqrt(err) + N^(-1/4))) for an algorithm that errs
/// with probability at most err. C is the unspecified O(.) constant.
ErrorBound zalka_error_bound(std::uint64_t n, double err, double hidden_const = 1.0);

/// Final states of the hybrid runs for one marked element y: the first T - i
/// queries go to the identity oracle, the last i to O_y.
struct HybridTrajectory {
  BlockConfig cfg;  // target() is the marked element y
  PipelineScript script;
  std::uint64_t query_total = 0;        // T
  std::vector<DenseState> finals;       // finals[i] = phi_T^{y,i}, i = 0..T
  std::vector<DenseState> identity_run; // identity_run[t] = phi_t, state before query t+1 (t = 0..T)
  std::vector<double> probs;            // probs[t] = p_{t,y} = |P_y phi_t|^2, t = 0..T
};

HybridTrajectory build_hybrid_trajectory(const BlockConfig& cfg, const PipelineScript& script,
                                         std::uint64_t dense_cap = kDefaultDenseCap);

/// margins[i-1] = 2 arcsin sqrt(p_{T-i,y}) - angle(phi_T^{y,i-1}, phi_T^{y,i}) for i = 1..T.
/// The per-step bound holds iff every margin is >= 0 up to rounding.
std::vector<double> check_lemma2(const HybridTrajectory& traj);

struct Lemma1Diagnostic {
  double sum_of_angles = 0.0;  // sum_y angle(phi_T, phi_T^y)
  double reference = 0.0;      // (pi/2) N
  double ratio() const { return reference > 0.0 ? sum_of_angles / reference : 0.0; }
};

/// Runs `script` for every marked y in [N] (the target in `cfg` is ignored).
Lemma1Diagnostic check_lemma1(const BlockConfig& cfg, const PipelineScript& script,
                              std::uint64_t dense_cap = kDefaultDenseCap);

/// sum_y arcsin sqrt(p_y).
double arcsin_sqrt_sum(const std::vector<double>& p);

struct Lemma3Result {
  double max_sum = 0.0;  // largest sum observed
  double bound = 0.0;    // N arcsin(1/sqrt N)
  std::uint64_t points_checked = 0;
};

/// Maximizes sum_y arcsin sqrt(p_y) over `samples` uniform Dirichlet draws
/// plus structured corners (point masses, two-point mixtures, near-uniform
/// perturbations). The lemma claims max_sum <= bound.
Lemma3Result check_lemma3(std::uint64_t n, std::uint64_t samples, std::uint64_t seed);

}  // namespace psearch
