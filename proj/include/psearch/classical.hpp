#pragma once

#include <cstdint>
#include <optional>

namespace psearch {

struct ClassicalReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  double expected_randomized = 0.0;  // (N/2)(1 - 1/K^2)
  double deterministic = 0.0;        // N(1 - 1/K)
  double exact_randomized = 0.0;     // exact mean probes of the randomized algorithm
  std::optional<double> sample_mean;
  std::optional<double> sample_std_err;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t errors = 0;  // trials that returned a wrong block (must stay 0)
};

ClassicalReport classical_formulas(std::uint64_t n, std::uint64_t k);

/// The lower-bound averaging argument: with probability 1 - 1/K the target is
/// among the first N - N/K probes (conditional mean (N/2)(1 - 1/K)), otherwise
/// N(1 - 1/K) probes are spent.
double two_case_expectation(std::uint64_t n, std::uint64_t k);

/// Exact mean probe count of the randomized algorithm: the conditional mean
/// inside the probed region is (M + 1)/2 with M = N - N/K rather than M/2.
double exact_randomized_expectation(std::uint64_t n, std::uint64_t k);

enum class TargetPlacement {
  uniform,         // target uniform over [N]
  unprobed_block,  // target forced into the block the algorithm skips
};

/// Monte Carlo run of the zero-error randomized algorithm: skip one random
/// block, probe the other N - N/K cells in random order, stop on a hit.
/// Trial i draws from its own stream derive_seed(seed, i).
ClassicalReport simulate_randomized(std::uint64_t n, std::uint64_t k, std::uint64_t trials,
                                    std::uint64_t seed,
                                    TargetPlacement placement = TargetPlacement::uniform);

}  // namespace psearch
