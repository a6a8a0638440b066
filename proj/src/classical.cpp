#include "psearch/classical.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "psearch/errors.hpp"
#include "psearch/rng.hpp"

namespace psearch {
namespace {

void validate(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0 || k > n) throw InvalidInstance("need 1 <= K <= N");
  if (n % k != 0)
    throw InvalidInstance("K=" + std::to_string(k) + " does not divide N=" + std::to_string(n));
}

struct TrialOutcome {
  std::uint64_t probes;
  bool correct;
};

TrialOutcome run_trial(std::uint64_t n, std::uint64_t k, Rng& rng, TargetPlacement placement,
                       std::vector<std::uint64_t>& cells) {
  const std::uint64_t size = n / k;
  const std::uint64_t skipped = rng.uniform_index(k);
  const std::uint64_t target = placement == TargetPlacement::uniform
                                   ? rng.uniform_index(n)
                                   : skipped * size + rng.uniform_index(size);

  cells.clear();
  for (std::uint64_t x = 0; x < n; ++x)
    if (x / size != skipped) cells.push_back(x);

  // Lazy Fisher-Yates: draw the next probe only when it is needed.
  const std::size_t m = cells.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.uniform_index(m - i);
    std::swap(cells[i], cells[j]);
    if (cells[i] == target) return {i + 1, cells[i] / size == target / size};
  }
  return {m, skipped == target / size};
}

}  // namespace

ClassicalReport classical_formulas(std::uint64_t n, std::uint64_t k) {
  validate(n, k);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  ClassicalReport r;
  r.n = n;
  r.k = k;
  r.expected_randomized = nd / 2.0 * (1.0 - 1.0 / (kd * kd));
  r.deterministic = nd * (1.0 - 1.0 / kd);
  r.exact_randomized = exact_randomized_expectation(n, k);
  return r;
}

double two_case_expectation(std::uint64_t n, std::uint64_t k) {
  validate(n, k);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double p_probed = 1.0 - 1.0 / kd;
  return p_probed * (nd / 2.0) * (1.0 - 1.0 / kd) + (1.0 / kd) * nd * (1.0 - 1.0 / kd);
}

double exact_randomized_expectation(std::uint64_t n, std::uint64_t k) {
  validate(n, k);
  const double m = static_cast<double>(n - n / k);
  const double kd = static_cast<double>(k);
  return (1.0 - 1.0 / kd) * (m + 1.0) / 2.0 + m / kd;
}

ClassicalReport simulate_randomized(std::uint64_t n, std::uint64_t k, std::uint64_t trials,
                                    std::uint64_t seed, TargetPlacement placement) {
  if (trials == 0) throw InvalidInstance("need at least one trial");
  ClassicalReport r = classical_formulas(n, k);
  r.trials = trials;
  r.seed = seed;

  std::vector<std::uint64_t> cells;
  cells.reserve(n);
  // Welford accumulation keeps the variance stable for large trial counts.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    const auto outcome = run_trial(n, k, rng, placement, cells);
    if (!outcome.correct) ++r.errors;
    const double x = static_cast<double>(outcome.probes);
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  r.sample_mean = mean;
  const double variance = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
  r.sample_std_err = std::sqrt(variance / static_cast<double>(trials));
  return r;
}

}  // namespace psearch
