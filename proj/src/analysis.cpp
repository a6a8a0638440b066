#include "psearch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "psearch/errors.hpp"

namespace psearch {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGridStep = 1e-4;

void require_k(int k, int min_k) {
  if (k < min_k)
    throw InvalidInstance("K must be at least " + std::to_string(min_k) + " (got " +
                          std::to_string(k) + ")");
}

double checked_arcsin(double arg, const char* what) {
  if (arg > 1.0 + kArcsinClamp) throw Infeasible(what);
  return std::asin(std::clamp(arg, 0.0, 1.0));
}

double theta1_arg(double theta, int k) {
  return std::sin(theta) / (alpha_target(theta, k) * std::sqrt(static_cast<double>(k)));
}

double theta2_arg(double theta, int k) {
  return (k - 2) * std::sin(theta) / (2.0 * alpha_target(theta, k) * std::sqrt(double(k)));
}

}  // namespace

double theta_of_epsilon(double epsilon) { return kPi / 2.0 * epsilon; }

double alpha_target(double theta, int k) {
  require_k(k, 1);
  const double s = std::sin(theta);
  return std::sqrt(1.0 - (static_cast<double>(k - 1) / k) * s * s);
}

double theta1(double theta, int k) {
  return checked_arcsin(theta1_arg(theta, k),
                        "infeasible: theta1 arcsin argument sin(theta)/(alpha sqrt K) exceeds 1");
}

double theta2(double theta, int k) {
  return checked_arcsin(theta2_arg(theta, k),
                        "infeasible: theta2 arcsin argument exceeds 1; need sin(theta) <= 2/sqrt(K)");
}

CostBreakdown cost_at_theta(double epsilon, double theta, int k) {
  require_k(k, 2);
  CostBreakdown out;
  out.epsilon = epsilon;
  out.k = k;
  out.theta = theta;
  out.alpha_t = alpha_target(theta, k);
  const double arg1 = theta1_arg(theta, k);
  const double arg2 = theta2_arg(theta, k);
  if (arg1 > 1.0 + kArcsinClamp || arg2 > 1.0 + kArcsinClamp) return out;
  out.theta1 = std::asin(std::clamp(arg1, 0.0, 1.0));
  out.theta2 = std::asin(std::clamp(arg2, 0.0, 1.0));
  out.feasible = true;
  out.coefficient =
      kPi / 4.0 * (1.0 - epsilon) + (out.theta1 + out.theta2) / (2.0 * std::sqrt(double(k)));
  return out;
}

CostBreakdown cost_coefficient(double epsilon, int k) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw InvalidInstance("epsilon must lie in [0, 1] (got " + std::to_string(epsilon) + ")");
  return cost_at_theta(epsilon, theta_of_epsilon(epsilon), k);
}

double max_feasible_epsilon(int k) {
  require_k(k, 2);
  if (k <= 4) return 1.0;
  return 2.0 / kPi * std::asin(2.0 / std::sqrt(static_cast<double>(k)));
}

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return (lo + hi) / 2.0;
}

EpsilonOptimum optimize_epsilon(int k, double tol) {
  require_k(k, 2);
  if (!(tol > 0.0)) throw InvalidInstance("tolerance must be positive");
  const double edge = max_feasible_epsilon(k);
  auto f = [k](double eps) {
    // The edge itself may graze the arcsin wall; an infeasible probe is +inf.
    return cost_coefficient(std::clamp(eps, 0.0, 1.0), k).coefficient.value_or(INFINITY);
  };

  std::vector<double> grid;
  const auto steps = static_cast<std::size_t>(std::floor(edge / kGridStep));
  for (std::size_t i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) * kGridStep);
  if (grid.back() < edge) grid.push_back(edge);

  std::size_t best = 0;
  double best_f = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double fi = f(grid[i]);
    if (fi < best_f) {
      best_f = fi;
      best = i;
    }
  }

  const double lo = best == 0 ? grid[0] : grid[best - 1];
  const double hi = best + 1 == grid.size() ? grid[best] : grid[best + 1];
  const double refined = golden_section_minimize(f, lo, hi, tol);

  std::vector<EpsilonOptimum> candidates{{grid[best], best_f}, {refined, f(refined)},
                                         {lo, f(lo)}, {hi, f(hi)}};
  double min_f = INFINITY;
  for (const auto& c : candidates) min_f = std::min(min_f, c.coefficient);
  EpsilonOptimum chosen{INFINITY, INFINITY};
  for (const auto& c : candidates) {
    if (c.coefficient <= min_f + tol && c.epsilon < chosen.epsilon) chosen = c;
  }
  return chosen;
}

double lower_bound_coefficient(int k) {
  require_k(k, 1);
  return kPi / 4.0 * (1.0 - 1.0 / std::sqrt(static_cast<double>(k)));
}

double large_k_constant() { return 1.0 - 2.0 / kPi * std::asin(kPi / 4.0); }

double large_k_guarantee(int k) {
  require_k(k, 2);
  return kPi / 4.0 * (1.0 - large_k_constant() / std::sqrt(static_cast<double>(k)));
}

double naive_quantum_coefficient(int k) {
  require_k(k, 2);
  return kPi / 4.0 * std::sqrt(static_cast<double>(k - 1) / k);
}

double reduction_total_queries(double alpha_coeff, int k, std::uint64_t n) {
  require_k(k, 2);
  if (!(alpha_coeff > 0.0)) throw InvalidInstance("alpha coefficient must be positive");
  const double root_k = std::sqrt(static_cast<double>(k));
  return alpha_coeff * std::sqrt(static_cast<double>(n)) * root_k / (root_k - 1.0);
}

std::vector<BoundsRow> build_table(const std::vector<int>& ks, double tol) {
  std::vector<BoundsRow> rows;
  rows.reserve(ks.size());
  for (int k : ks) {
    const auto opt = optimize_epsilon(k, tol);
    rows.push_back({k, opt.epsilon, opt.coefficient, lower_bound_coefficient(k),
                    naive_quantum_coefficient(k)});
  }
  return rows;
}

}  // namespace psearch
