#include "psearch/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "psearch/analysis.hpp"
#include "psearch/classical.hpp"
#include "psearch/errors.hpp"
#include "psearch/reduced.hpp"
#include "psearch/rng.hpp"
#include "psearch/zalka.hpp"

#ifndef PSEARCH_VERSION
#define PSEARCH_VERSION "0.0.0"
#endif

namespace psearch::cli {
namespace {

constexpr double kPi = std::numbers::pi;

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw InvalidInstance(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

int single_k(const CommandConfig& config) { return parse_int(config.k, "--k"); }

std::uint64_t pick_target(const CommandConfig& config, std::uint64_t n) {
  if (config.target) return *config.target;
  // Stream 0 of the run seed is reserved for the target draw.
  Rng rng(derive_seed(config.seed, 0));
  return rng.uniform_index(n);
}

void add_run_report(Document& doc, const RunReport& r) {
  doc.add("n", r.n);
  doc.add("k", r.k);
  doc.add("target", r.target);
  doc.add("target_block", r.target / (r.n / r.k));
  if (r.epsilon) doc.add("epsilon", *r.epsilon);
  doc.add("l1", r.l1);
  doc.add("l2", r.l2);
  doc.add("queries", r.queries);
  doc.add("queries_over_sqrt_n", static_cast<double>(r.queries) / std::sqrt(double(r.n)));
  doc.add("success_prob", r.success_prob);
  doc.add("target_prob", r.target_prob);
  doc.add("predicted_block", r.predicted_block);
  doc.add("block_probs", r.block_probs);
}

Document simulate(const CommandConfig& config) {
  const int k = single_k(config);
  if (k < 2) throw InvalidInstance("partial search needs --k >= 2");
  const BlockConfig cfg(config.n, static_cast<std::uint64_t>(k), pick_target(config, config.n));
  const double epsilon = config.epsilon ? *config.epsilon : optimize_epsilon(k, config.tol).epsilon;
  const RunOptions options{config.backend, config.dense_cap, config.theta_mode};
  const RunReport report = run_partial_search(cfg, epsilon, options);
  Document doc;
  doc.add("epsilon_source", std::string(config.epsilon ? "user" : "optimizer"));
  doc.add("theta_mode", std::string(config.theta_mode == ThetaMode::exact ? "exact" : "asymptotic"));
  add_run_report(doc, report);
  doc.add("predicted_coeff", cost_coefficient(epsilon, k).coefficient.value_or(NAN));
  doc.add("correct", report.predicted_block == cfg.target_block());
  return doc;
}

Document grover(const CommandConfig& config) {
  const int k = single_k(config);
  const BlockConfig cfg(config.n, static_cast<std::uint64_t>(k), pick_target(config, config.n));
  const std::uint64_t steps = config.steps ? *config.steps : grover_optimal_steps(config.n);
  const RunOptions options{config.backend, config.dense_cap, config.theta_mode};
  const RunReport report = run_full_grover(cfg, steps, options);
  Document doc;
  doc.add("steps", steps);
  add_run_report(doc, report);
  const double beta = std::asin(1.0 / std::sqrt(static_cast<double>(config.n)));
  const double closed = std::sin((2.0 * static_cast<double>(steps) + 1.0) * beta);
  doc.add("closed_form_target_prob", closed * closed);
  return doc;
}

Document optimize(const CommandConfig& config) {
  const int k = single_k(config);
  const auto opt = optimize_epsilon(k, config.tol);
  const auto at = cost_coefficient(opt.epsilon, k);
  Document doc;
  doc.add("k", static_cast<std::int64_t>(k));
  doc.add("epsilon_star", opt.epsilon);
  doc.add("coeff_star", opt.coefficient);
  doc.add("feasible_edge", max_feasible_epsilon(k));
  doc.add("theta", at.theta);
  doc.add("alpha_t", at.alpha_t);
  doc.add("theta1", at.theta1);
  doc.add("theta2", at.theta2);
  doc.add("lower_coeff", lower_bound_coefficient(k));
  doc.add("naive_coeff", naive_quantum_coefficient(k));
  doc.add("large_k_guarantee", large_k_guarantee(k));
  doc.add("tol", config.tol);
  return doc;
}

Document table(const CommandConfig& config) {
  const auto rows = build_table(parse_k_list(config.k), config.tol);
  Table t{"rows", {"K", "epsilon_star", "upper_coeff", "lower_coeff", "naive_coeff"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({static_cast<std::int64_t>(r.k), r.epsilon_star, r.upper_coeff,
                      r.lower_coeff, r.naive_coeff});
  }
  Document doc;
  doc.add("full_search_coeff", kPi / 4.0);
  doc.tables.push_back(std::move(t));
  return doc;
}

Document classical(const CommandConfig& config) {
  const auto k = static_cast<std::uint64_t>(single_k(config));
  const ClassicalReport r = config.trials > 0
                                ? simulate_randomized(config.n, k, config.trials, config.seed)
                                : classical_formulas(config.n, k);
  if (r.errors != 0) throw ContractViolation("randomized classical search returned a wrong block");
  Document doc;
  doc.add("n", r.n);
  doc.add("k", r.k);
  doc.add("expected_randomized", r.expected_randomized);
  doc.add("two_case_expectation", two_case_expectation(r.n, r.k));
  doc.add("exact_randomized", r.exact_randomized);
  doc.add("deterministic", r.deterministic);
  doc.add("trials", r.trials);
  if (r.sample_mean) {
    doc.add("sample_mean", *r.sample_mean);
    doc.add("sample_std_err", *r.sample_std_err);
    const double z = *r.sample_std_err > 0.0
                         ? (*r.sample_mean - r.expected_randomized) / *r.sample_std_err
                         : 0.0;
    doc.add("z_score", z);
  }
  doc.add("errors", r.errors);
  return doc;
}

Document bounds(const CommandConfig& config) {
  const int k = single_k(config);
  const auto opt = optimize_epsilon(k, config.tol);
  const auto zalka = zalka_error_bound(config.n, config.err, config.hidden_const);
  Document doc;
  doc.add("n", config.n);
  doc.add("k", static_cast<std::int64_t>(k));
  doc.add("upper_coeff", opt.coefficient);
  doc.add("lower_coeff", lower_bound_coefficient(k));
  doc.add("naive_coeff", naive_quantum_coefficient(k));
  doc.add("large_k_constant", large_k_constant());
  doc.add("large_k_guarantee", large_k_guarantee(k));
  doc.add("reduction_total_at_lower", reduction_total_queries(lower_bound_coefficient(k), k, config.n));
  doc.add("reduction_total_at_upper", reduction_total_queries(opt.coefficient, k, config.n));
  doc.add("full_search_queries", kPi / 4.0 * std::sqrt(static_cast<double>(config.n)));
  doc.add("error_bound_err", config.err);
  doc.add("error_bound_hidden_const", config.hidden_const);
  doc.add("error_bound_queries", zalka.queries);
  doc.add("error_bound_regime_warning", zalka.regime_warning);
  return doc;
}

void add_histogram(Table& t, const std::string& stage, const DenseState& s, const BlockConfig& cfg) {
  for (std::uint64_t x = 0; x < cfg.n_addresses(); ++x) {
    // Branch 1 only carries the moved-out target; fold it in so the histogram
    // shows every address once.
    double amp = s.at(x, 0).real();
    if (s.has_ancilla() && x == cfg.target()) {
      t.rows.push_back({stage + "_moved_out", cfg.block_of(x), cfg.offset_in_block(x),
                        s.at(x, 1).real()});
    }
    t.rows.push_back({stage, cfg.block_of(x), cfg.offset_in_block(x), amp});
  }
}

Document demo_fig1(const CommandConfig& config) {
  const std::uint64_t target = config.target.value_or(0);
  const BlockConfig cfg(12, 3, target);
  Table t{"histogram", {"stage", "block", "slot", "amplitude"}, {}};
  DenseState state = uniform_state(12);
  add_histogram(t, "A", state, cfg);
  const char* stages[] = {"B", "C", "D", "E"};
  std::size_t i = 0;
  for (auto op : fig1_script()) {
    state = apply(state, cfg, op);
    add_histogram(t, stages[i++], state, cfg);
  }

  const double u = 1.0 / std::sqrt(12.0);
  double max_dev = 0.0;
  for (std::uint64_t x = 0; x < 12; ++x) {
    const double expected = x == target ? 3 * u : cfg.block_of(x) == cfg.target_block() ? u : 0.0;
    max_dev = std::max(max_dev, std::abs(state.at(x) - Amplitude{expected, 0.0}));
  }
  const RunReport report = make_report(state, cfg);
  if (max_dev > 1e-12 || report.queries != 2)
    throw ContractViolation("twelve-item demo did not reach the expected final state");

  Document doc;
  doc.add("which", std::string("fig1"));
  doc.add("n", std::uint64_t{12});
  doc.add("k", std::uint64_t{3});
  doc.add("target", target);
  doc.add("queries", report.queries);
  doc.add("success_prob", report.success_prob);
  doc.add("target_prob", report.target_prob);
  doc.add("max_deviation", max_dev);
  doc.tables.push_back(std::move(t));
  return doc;
}

Document demo_fig4(const CommandConfig& config) {
  const int k = single_k(config);
  if (k < 2) throw InvalidInstance("partial search needs --k >= 2");
  const BlockConfig cfg(config.n, static_cast<std::uint64_t>(k), pick_target(config, config.n));
  const double epsilon = config.epsilon ? *config.epsilon : optimize_epsilon(k, config.tol).epsilon;
  const auto plan = iteration_counts(cfg.n_addresses(), cfg.n_blocks(), epsilon, config.theta_mode);

  ReducedState state = run_reduced(cfg, grover_script(plan.l1));
  Table t{"histogram", {"stage", "block", "slot", "amplitude"}, {}};
  add_histogram(t, "after_step1", lift_to_dense(state, config.dense_cap), cfg);
  for (std::uint64_t i = 0; i < plan.l2; ++i) {
    state = reduced_apply(state, OperatorTag::oracle);
    state = reduced_apply(state, OperatorTag::block_diffusion);
  }
  add_histogram(t, "after_step2", lift_to_dense(state, config.dense_cap), cfg);
  const double p_block_others = static_cast<double>(cfg.block_size() - 1);
  const double p_outside = static_cast<double>(cfg.n_addresses() - cfg.block_size());
  const double non_target_mean =
      (p_block_others * state.b + p_outside * state.c) / static_cast<double>(cfg.n_addresses() - 1);
  const double c_before_step3 = state.c;
  state = reduced_apply(state, OperatorTag::step3);
  add_histogram(t, "after_step3", lift_to_dense(state, config.dense_cap), cfg);

  Document doc;
  doc.add("which", std::string("fig4"));
  doc.add("n", cfg.n_addresses());
  doc.add("k", cfg.n_blocks());
  doc.add("target", cfg.target());
  doc.add("epsilon", epsilon);
  doc.add("l1", plan.l1);
  doc.add("l2", plan.l2);
  doc.add("non_target_mean_after_step2", non_target_mean);
  doc.add("half_non_target_block_amplitude", c_before_step3 / 2.0);
  doc.add("success_prob", state.target_block_probability());
  doc.tables.push_back(std::move(t));
  return doc;
}

Document demo(const CommandConfig& config) {
  if (config.which == "fig1") return demo_fig1(config);
  if (config.which == "fig4") return demo_fig4(config);
  throw InvalidInstance("unknown demo '" + config.which + "' (expected fig1 or fig4)");
}

}  // namespace

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    ks.push_back(parse_int(item, "--k entry"));
  }
  return ks;
}

Document execute(const CommandConfig& config) {
  static const std::map<std::string, Document (*)(const CommandConfig&)> commands{
      {"simulate", simulate}, {"grover", grover},   {"optimize", optimize}, {"table", table},
      {"classical", classical}, {"bounds", bounds}, {"demo", demo}};
  const auto it = commands.find(config.command);
  if (it == commands.end()) throw InvalidInstance("unknown command '" + config.command + "'");
  Document doc = it->second(config);

  Document out;
  out.add_meta("tool", std::string("psearch"));
  out.add_meta("version", std::string(PSEARCH_VERSION));
  out.add_meta("command", config.command);
  out.add_meta("command_line", config.command_line);
  out.add_meta("seed", config.seed);
  out.add_meta("backend", std::string(to_string(config.backend)));
  out.fields = std::move(doc.fields);
  out.tables = std::move(doc.tables);
  return out;
}

int dispatch(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Document doc = execute(config);
    if (config.output.empty()) {
      render(doc, config.format, out);
      return kExitOk;
    }
    const std::string rendered = render_to_string(doc, config.format);
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open output path '" << config.output << "' for writing\n";
      return kExitInvalid;
    }
    file << rendered;
    if (!file.flush()) {
      err << "error: failed writing output path '" << config.output << "'\n";
      return kExitInvalid;
    }
    return kExitOk;
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << " (try a smaller --epsilon or omit it to use the optimizer)\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  std::string backend = "reduced";
  std::string format = "text";
  std::string theta_mode = "asymptotic";

  CLI::App app{"Partial quantum search simulator and query-count toolkit", "psearch"};
  app.set_version_flag("--version", PSEARCH_VERSION);
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", config.output, "Write the report here instead of stdout");
    sub->add_option("--seed", config.seed, "Seed for every random draw");
  };
  auto instance = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Number of addresses N");
    sub->add_option("--k", config.k, "Number of blocks K");
    sub->add_option("--target", config.target, "Target address (random from --seed if omitted)");
    sub->add_option("--backend", backend, "Simulation backend")
        ->check(CLI::IsMember({"dense", "reduced"}));
    sub->add_option("--dense-cap", config.dense_cap, "Largest N the dense backend accepts");
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--epsilon", config.epsilon, "Step-1 early stop (default: optimizer)");
    sub->add_option("--theta-mode", theta_mode, "Angle fed to the Step-2 count")
        ->check(CLI::IsMember({"asymptotic", "exact"}));
    sub->add_option("--tol", config.tol, "Optimizer tolerance");
  };

  auto* simulate_cmd = app.add_subcommand("simulate", "Run the three-step partial search");
  common(simulate_cmd);
  instance(simulate_cmd);
  search(simulate_cmd);

  auto* grover_cmd = app.add_subcommand("grover", "Run plain Grover iterations");
  common(grover_cmd);
  instance(grover_cmd);
  grover_cmd->add_option("--steps", config.steps, "Iterations (default round(pi/4 sqrt N))");

  auto* optimize_cmd = app.add_subcommand("optimize", "Optimal epsilon and cost for one K");
  common(optimize_cmd);
  optimize_cmd->add_option("--k", config.k, "Number of blocks K");
  optimize_cmd->add_option("--tol", config.tol, "Optimizer tolerance");

  auto* table_cmd = app.add_subcommand("table", "Upper/lower coefficient table");
  common(table_cmd);
  table_cmd->add_option("--k", config.k, "Comma-separated list of K")->default_str("2,3,4,5,8,32");
  table_cmd->add_option("--tol", config.tol, "Optimizer tolerance");

  auto* classical_cmd = app.add_subcommand("classical", "Classical baselines and Monte Carlo");
  common(classical_cmd);
  classical_cmd->add_option("--n", config.n, "Number of addresses N");
  classical_cmd->add_option("--k", config.k, "Number of blocks K");
  classical_cmd->add_option("--trials", config.trials, "Monte Carlo trials (0: formulas only)");

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds and reduction costs");
  common(bounds_cmd);
  bounds_cmd->add_option("--n", config.n, "Number of addresses N");
  bounds_cmd->add_option("--k", config.k, "Number of blocks K");
  bounds_cmd->add_option("--tol", config.tol, "Optimizer tolerance");
  bounds_cmd->add_option("--err", config.err, "Error probability for the erring-search bound");
  bounds_cmd->add_option("--hidden-const", config.hidden_const, "Constant inside the O(.) term");

  auto* demo_cmd = app.add_subcommand("demo", "Amplitude histograms (fig1: 12 items; fig4: Steps 1-3)");
  common(demo_cmd);
  instance(demo_cmd);
  search(demo_cmd);
  demo_cmd->add_option("--which", config.which, "fig1 or fig4")
      ->check(CLI::IsMember({"fig1", "fig4"}));

  bool table_k_given = false;
  try {
    app.parse(argc, argv);
    table_k_given = table_cmd->count("--k") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "table" && !table_k_given) config.k = "2,3,4,5,8,32";
  config.command_line = "psearch";
  for (int i = 1; i < argc; ++i) {
    config.command_line += ' ';
    config.command_line += argv[i];
  }
  try {
    config.backend = parse_backend(backend);
    config.format = parse_format(format);
    config.theta_mode = theta_mode == "exact" ? ThetaMode::exact : ThetaMode::asymptotic;
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return dispatch(config, out, err);
}

}  // namespace psearch::cli
