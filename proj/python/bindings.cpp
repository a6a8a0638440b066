#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "psearch/analysis.hpp"
#include "psearch/classical.hpp"
#include "psearch/cli.hpp"
#include "psearch/errors.hpp"
#include "psearch/partial_search.hpp"
#include "psearch/reduced.hpp"
#include "psearch/statevector.hpp"
#include "psearch/zalka.hpp"

namespace py = pybind11;
using namespace psearch;

namespace {

py::array_t<std::complex<double>> amplitudes_array(const DenseState& s) {
  const auto amps = s.amplitudes();
  return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(amps.size()), amps.data());
}

PipelineScript script_from(const std::vector<std::string>& names) {
  std::vector<OperatorTag> ops;
  ops.reserve(names.size());
  for (const auto& n : names) ops.push_back(parse_operator(n));
  return PipelineScript(std::move(ops));
}

RunOptions options(const std::string& backend, std::uint64_t dense_cap, const std::string& mode) {
  return {parse_backend(backend), dense_cap, mode == "exact" ? ThetaMode::exact : ThetaMode::asymptotic};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partial quantum search: statevector simulation, cost analysis and bounds.";

  py::register_exception<InvalidInstance>(m, "InvalidInstanceError", PyExc_ValueError);
  py::register_exception<Infeasible>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolationError", PyExc_RuntimeError);

  py::class_<BlockConfig>(m, "BlockConfig")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("n"), py::arg("k"),
           py::arg("target"))
      .def_property_readonly("n", &BlockConfig::n_addresses)
      .def_property_readonly("k", &BlockConfig::n_blocks)
      .def_property_readonly("target", &BlockConfig::target)
      .def_property_readonly("block_size", &BlockConfig::block_size)
      .def_property_readonly("target_block", &BlockConfig::target_block)
      .def("block_of", &BlockConfig::block_of)
      .def("__repr__", [](const BlockConfig& c) { return "BlockConfig(" + to_string(c) + ")"; });

  py::class_<DenseState>(m, "DenseState")
      .def_property_readonly("amplitudes", &amplitudes_array)
      .def_property_readonly("n", &DenseState::n_addresses)
      .def_property_readonly("has_ancilla", &DenseState::has_ancilla)
      .def_property_readonly("queries", &DenseState::queries)
      .def("norm_squared", &DenseState::norm_squared)
      .def("address_probability", &DenseState::address_probability)
      .def("at", &DenseState::at, py::arg("x"), py::arg("branch") = 0);

  m.def("uniform_state", &uniform_state, py::arg("n"), py::arg("with_ancilla") = false,
        py::arg("dense_cap") = kDefaultDenseCap);
  m.def("invert_target", [](const DenseState& s, const BlockConfig& c) { return invert_target(s, c); });
  m.def("global_diffusion", &global_diffusion);
  m.def("block_diffusion", &block_diffusion);
  m.def("step3_transfer", [](const DenseState& s, const BlockConfig& c) { return step3_transfer(s, c); });
  m.def("block_probabilities",
        py::overload_cast<const DenseState&, const BlockConfig&>(&block_probabilities));
  m.def("run_dense", [](const BlockConfig& c, const std::vector<std::string>& script) {
    return run_dense(c, script_from(script));
  });

  py::class_<ReducedState>(m, "ReducedState")
      .def_readonly("a", &ReducedState::a)
      .def_readonly("b", &ReducedState::b)
      .def_readonly("c", &ReducedState::c)
      .def_readonly("d", &ReducedState::d)
      .def_readonly("queries", &ReducedState::queries)
      .def("norm_squared", &ReducedState::norm_squared)
      .def("block_probabilities", [](const ReducedState& s) { return block_probabilities(s); });
  m.def("reduced_init", &reduced_init);
  m.def("reduced_apply", [](const ReducedState& s, const std::string& op) {
    return reduced_apply(s, parse_operator(op));
  });
  m.def("lift_to_dense", &lift_to_dense, py::arg("state"), py::arg("dense_cap") = kDefaultDenseCap);

  m.def("grover_script", [](std::size_t steps) {
    std::vector<std::string> out;
    for (auto op : grover_script(steps)) out.emplace_back(to_string(op));
    return out;
  });
  m.def("partial_search_script", [](std::size_t l1, std::size_t l2) {
    std::vector<std::string> out;
    for (auto op : partial_search_script(l1, l2)) out.emplace_back(to_string(op));
    return out;
  });
  m.def("fig1_script", [] {
    std::vector<std::string> out;
    for (auto op : fig1_script()) out.emplace_back(to_string(op));
    return out;
  });

  py::class_<CostBreakdown>(m, "CostBreakdown")
      .def_readonly("epsilon", &CostBreakdown::epsilon)
      .def_readonly("k", &CostBreakdown::k)
      .def_readonly("theta", &CostBreakdown::theta)
      .def_readonly("alpha_t", &CostBreakdown::alpha_t)
      .def_readonly("theta1", &CostBreakdown::theta1)
      .def_readonly("theta2", &CostBreakdown::theta2)
      .def_readonly("feasible", &CostBreakdown::feasible)
      .def_readonly("coefficient", &CostBreakdown::coefficient);

  py::class_<BoundsRow>(m, "BoundsRow")
      .def_readonly("k", &BoundsRow::k)
      .def_readonly("epsilon_star", &BoundsRow::epsilon_star)
      .def_readonly("upper_coeff", &BoundsRow::upper_coeff)
      .def_readonly("lower_coeff", &BoundsRow::lower_coeff)
      .def_readonly("naive_coeff", &BoundsRow::naive_coeff);

  m.def("alpha_target", &alpha_target, py::arg("theta"), py::arg("k"));
  m.def("theta1", &theta1, py::arg("theta"), py::arg("k"));
  m.def("theta2", &theta2, py::arg("theta"), py::arg("k"));
  m.def("cost_coefficient", &cost_coefficient, py::arg("epsilon"), py::arg("k"));
  m.def("max_feasible_epsilon", &max_feasible_epsilon, py::arg("k"));
  m.def(
      "optimize_epsilon",
      [](int k, double tol) {
        const auto o = optimize_epsilon(k, tol);
        return py::make_tuple(o.epsilon, o.coefficient);
      },
      py::arg("k"), py::arg("tol") = 1e-9);
  m.def("lower_bound_coefficient", &lower_bound_coefficient, py::arg("k"));
  m.def("large_k_constant", &large_k_constant);
  m.def("large_k_guarantee", &large_k_guarantee, py::arg("k"));
  m.def("naive_quantum_coefficient", &naive_quantum_coefficient, py::arg("k"));
  m.def("reduction_total_queries", &reduction_total_queries, py::arg("alpha_coeff"), py::arg("k"),
        py::arg("n"));
  m.def("build_table", &build_table, py::arg("ks"), py::arg("tol") = 1e-9);

  py::class_<IterationPlan>(m, "IterationPlan")
      .def_readonly("l1", &IterationPlan::l1)
      .def_readonly("l2", &IterationPlan::l2)
      .def_readonly("breakdown", &IterationPlan::breakdown);
  m.def(
      "iteration_counts",
      [](std::uint64_t n, std::uint64_t k, double eps, const std::string& mode) {
        return iteration_counts(n, k, eps, mode == "exact" ? ThetaMode::exact : ThetaMode::asymptotic);
      },
      py::arg("n"), py::arg("k"), py::arg("epsilon"), py::arg("theta_mode") = "asymptotic");

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("queries", &RunReport::queries)
      .def_readonly("block_probs", &RunReport::block_probs)
      .def_readonly("success_prob", &RunReport::success_prob)
      .def_readonly("target_prob", &RunReport::target_prob)
      .def_readonly("predicted_block", &RunReport::predicted_block)
      .def_property_readonly("backend", [](const RunReport& r) { return std::string(to_string(r.backend)); })
      .def_readonly("epsilon", &RunReport::epsilon)
      .def_readonly("l1", &RunReport::l1)
      .def_readonly("l2", &RunReport::l2);

  m.def(
      "run_partial_search",
      [](const BlockConfig& c, double eps, const std::string& backend, std::uint64_t cap,
         const std::string& mode) { return run_partial_search(c, eps, options(backend, cap, mode)); },
      py::arg("cfg"), py::arg("epsilon"), py::arg("backend") = "reduced",
      py::arg("dense_cap") = kDefaultDenseCap, py::arg("theta_mode") = "asymptotic");
  m.def(
      "run_full_grover",
      [](const BlockConfig& c, std::uint64_t steps, const std::string& backend) {
        return run_full_grover(c, steps, options(backend, kDefaultDenseCap, "asymptotic"));
      },
      py::arg("cfg"), py::arg("steps"), py::arg("backend") = "reduced");
  m.def(
      "run_script",
      [](const BlockConfig& c, const std::vector<std::string>& script, const std::string& backend) {
        return run_script(c, script_from(script), options(backend, kDefaultDenseCap, "asymptotic"));
      },
      py::arg("cfg"), py::arg("script"), py::arg("backend") = "reduced");

  py::class_<ClassicalReport>(m, "ClassicalReport")
      .def_readonly("n", &ClassicalReport::n)
      .def_readonly("k", &ClassicalReport::k)
      .def_readonly("expected_randomized", &ClassicalReport::expected_randomized)
      .def_readonly("deterministic", &ClassicalReport::deterministic)
      .def_readonly("exact_randomized", &ClassicalReport::exact_randomized)
      .def_readonly("sample_mean", &ClassicalReport::sample_mean)
      .def_readonly("sample_std_err", &ClassicalReport::sample_std_err)
      .def_readonly("trials", &ClassicalReport::trials)
      .def_readonly("seed", &ClassicalReport::seed)
      .def_readonly("errors", &ClassicalReport::errors);
  m.def("classical_formulas", &classical_formulas, py::arg("n"), py::arg("k"));
  m.def("two_case_expectation", &two_case_expectation, py::arg("n"), py::arg("k"));
  m.def(
      "simulate_randomized",
      [](std::uint64_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed) {
        return simulate_randomized(n, k, trials, seed);
      },
      py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"));

  m.def("angle_distance", &angle_distance);
  m.def(
      "zalka_error_bound",
      [](std::uint64_t n, double err, double c) {
        const auto b = zalka_error_bound(n, err, c);
        return py::make_tuple(b.queries, b.regime_warning);
      },
      py::arg("n"), py::arg("err"), py::arg("hidden_const") = 1.0);
  m.def(
      "lemma2_margins",
      [](const BlockConfig& c, const std::vector<std::string>& script) {
        return check_lemma2(build_hybrid_trajectory(c, script_from(script)));
      },
      py::arg("cfg"), py::arg("script"));
  m.def(
      "check_lemma3",
      [](std::uint64_t n, std::uint64_t samples, std::uint64_t seed) {
        const auto r = check_lemma3(n, samples, seed);
        return py::make_tuple(r.max_sum, r.bound);
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"));

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"psearch"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
