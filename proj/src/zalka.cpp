#include "psearch/zalka.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "psearch/errors.hpp"
#include "psearch/rng.hpp"

namespace psearch {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTolerance = 1e-6;

// Runs `script` with the first `identity_queries` queries answered by the
// identity oracle and the rest by O_target.
DenseState run_hybrid(const BlockConfig& cfg, const PipelineScript& script,
                      std::uint64_t identity_queries, std::uint64_t dense_cap) {
  DenseState state = uniform_state(cfg.n_addresses(), false, dense_cap);
  std::uint64_t seen = 0;
  for (auto op : script) {
    OracleMode mode = OracleMode::marked;
    if (is_query(op)) mode = seen++ < identity_queries ? OracleMode::identity : OracleMode::marked;
    state = apply(state, cfg, op, mode);
  }
  return state;
}

}  // namespace

double angle_distance(const DenseState& v, const DenseState& w) {
  if (v.amplitudes().size() != w.amplitudes().size())
    throw InvalidInstance("angle_distance: states have different dimensions");
  if (std::abs(v.norm_squared() - 1.0) > kUnitTolerance ||
      std::abs(w.norm_squared() - 1.0) > kUnitTolerance)
    throw InvalidInstance("angle_distance: inputs must be unit vectors");
  Amplitude inner{0.0, 0.0};
  const auto a = v.amplitudes();
  const auto b = w.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) inner += std::conj(a[i]) * b[i];
  return std::acos(std::min(1.0, std::abs(inner)));
}

ErrorBound zalka_error_bound(std::uint64_t n, double err, double hidden_const) {
  if (n == 0) throw InvalidInstance("N must be positive");
  if (!(err >= 0.0 && err <= 1.0)) throw InvalidInstance("error probability must lie in [0, 1]");
  if (!(hidden_const > 0.0)) throw InvalidInstance("hidden constant must be positive");
  const double nd = static_cast<double>(n);
  const double slack = hidden_const * (std::sqrt(err) + std::pow(nd, -0.25));
  ErrorBound out;
  out.queries = std::max(0.0, kPi / 4.0 * std::sqrt(nd) * (1.0 - slack));
  out.regime_warning = n < 100 || err > 0.1;
  return out;
}

HybridTrajectory build_hybrid_trajectory(const BlockConfig& cfg, const PipelineScript& script,
                                         std::uint64_t dense_cap) {
  HybridTrajectory traj{cfg, script, script.query_count(), {}, {}, {}};
  const auto total = traj.query_total;

  traj.finals.reserve(total + 1);
  for (std::uint64_t i = 0; i <= total; ++i)
    traj.finals.push_back(run_hybrid(cfg, script, total - i, dense_cap));

  // phi_t for the all-identity run, captured just before each query and at the end.
  DenseState state = uniform_state(cfg.n_addresses(), false, dense_cap);
  for (auto op : script) {
    if (is_query(op)) traj.identity_run.push_back(state);
    state = apply(state, cfg, op, OracleMode::identity);
  }
  traj.identity_run.push_back(state);

  traj.probs.reserve(traj.identity_run.size());
  for (const auto& phi : traj.identity_run)
    traj.probs.push_back(phi.address_probability(cfg.target()));
  return traj;
}

std::vector<double> check_lemma2(const HybridTrajectory& traj) {
  const auto total = traj.query_total;
  std::vector<double> margins;
  margins.reserve(total);
  for (std::uint64_t i = 1; i <= total; ++i) {
    const double p = std::clamp(traj.probs[total - i], 0.0, 1.0);
    const double allowed = 2.0 * std::asin(std::sqrt(p));
    margins.push_back(allowed - angle_distance(traj.finals[i - 1], traj.finals[i]));
  }
  return margins;
}

Lemma1Diagnostic check_lemma1(const BlockConfig& cfg, const PipelineScript& script,
                              std::uint64_t dense_cap) {
  const auto n = cfg.n_addresses();
  const auto queries = script.query_count();
  const DenseState unmarked = run_hybrid(cfg, script, queries, dense_cap);
  Lemma1Diagnostic out;
  out.reference = kPi / 2.0 * static_cast<double>(n);
  for (std::uint64_t y = 0; y < n; ++y) {
    const DenseState marked = run_hybrid(cfg.with_target(y), script, 0, dense_cap);
    out.sum_of_angles += angle_distance(unmarked, marked);
  }
  return out;
}

double arcsin_sqrt_sum(const std::vector<double>& p) {
  double sum = 0.0;
  for (double x : p) sum += std::asin(std::sqrt(std::clamp(x, 0.0, 1.0)));
  return sum;
}

Lemma3Result check_lemma3(std::uint64_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 2) throw InvalidInstance("need N >= 2");
  if (samples == 0) throw InvalidInstance("need at least one sample");
  const double nd = static_cast<double>(n);
  Lemma3Result out;
  out.bound = nd * std::asin(1.0 / std::sqrt(nd));

  auto consider = [&out](const std::vector<double>& p) {
    out.max_sum = std::max(out.max_sum, arcsin_sqrt_sum(p));
    ++out.points_checked;
  };

  // Corners: uniform, point mass, two-point mixtures.
  consider(std::vector<double>(n, 1.0 / nd));
  std::vector<double> p(n, 0.0);
  p[0] = 1.0;
  consider(p);
  for (double w : {0.5, 0.75, 0.9, 0.99}) {
    std::fill(p.begin(), p.end(), 0.0);
    p[0] = w;
    p[1] = 1.0 - w;
    consider(p);
  }
  // One heavy entry with the rest spread evenly.
  for (double w : {0.5, 0.6, 0.75, 0.9}) {
    std::fill(p.begin(), p.end(), (1.0 - w) / (nd - 1.0));
    p[0] = w;
    consider(p);
  }

  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    double total = 0.0;
    for (auto& x : p) total += (x = rng.exponential());
    for (auto& x : p) x /= total;
    consider(p);
  }
  // Near-uniform perturbations probe the neighbourhood of the maximizer.
  for (double scale : {1e-2, 1e-4, 1e-6}) {
    for (std::uint64_t s = 0; s < std::min<std::uint64_t>(samples, 1000); ++s) {
      double total = 0.0;
      for (auto& x : p) total += (x = std::max(0.0, 1.0 / nd + scale * rng.normal() / nd));
      for (auto& x : p) x /= total;
      consider(p);
    }
  }
  return out;
}

}  // namespace psearch
