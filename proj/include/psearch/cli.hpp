#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psearch/partial_search.hpp"
#include "psearch/report.hpp"

namespace psearch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;

struct CommandConfig {
  std::string command;  // simulate grover optimize table classical bounds demo
  std::uint64_t n = std::uint64_t{1} << 16;
  std::string k = "4";  // single K, or a comma list for `table`
  std::optional<double> epsilon;
  Backend backend = Backend::reduced;
  ThetaMode theta_mode = ThetaMode::asymptotic;
  std::optional<std::uint64_t> target;
  std::optional<std::uint64_t> steps;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::uint64_t dense_cap = kDefaultDenseCap;
  double err = 0.01;
  double hidden_const = 1.0;
  std::string which = "fig1";
  Format format = Format::text;
  std::string output;
  std::string command_line;
};

/// Builds the report for one command. Throws InvalidInstance / Infeasible on
/// bad input and ContractViolation when an internal check fails.
Document execute(const CommandConfig& config);

/// Runs `execute`, writes the rendered report to config.output (or `out`) and
/// maps failures to exit codes 1 (invalid or infeasible input) and 2
/// (internal assertion). Messages go to `err` as one line.
int dispatch(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a CommandConfig and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::vector<int> parse_k_list(const std::string& text);

}  // namespace psearch::cli
