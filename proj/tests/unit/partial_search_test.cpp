#include "psearch/partial_search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "psearch/errors.hpp"
#include "psearch/reduced.hpp"

namespace psearch {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(IterationCounts, EpsilonZeroIsPlainSearch) {
  const auto plan = iteration_counts(1 << 16, 4, 0.0);
  EXPECT_EQ(plan.l2, 0u);
  EXPECT_EQ(plan.l1, static_cast<std::uint64_t>(std::llround(kPi / 4 * 256)));
  EXPECT_EQ(plan.breakdown.theta1, 0.0);
  EXPECT_EQ(plan.breakdown.theta2, 0.0);
}

TEST(IterationCounts, K2BoundaryClosedForm) {
  const auto plan = iteration_counts(1 << 16, 2, 1.0);
  EXPECT_EQ(plan.l1, 0u);
  EXPECT_NEAR(plan.breakdown.theta1, kPi / 2, 1e-7);
  EXPECT_EQ(plan.breakdown.theta2, 0.0);
  EXPECT_EQ(plan.l2, 142u);
}

TEST(IterationCounts, K8AtInverseRootK) {
  const auto plan = iteration_counts(1 << 16, 8, 1 / std::sqrt(8.0));
  const double coeff = static_cast<double>(plan.l1 + plan.l2 + 1) / 256.0;
  EXPECT_NEAR(coeff, 0.670, 0.01);
}

TEST(IterationCounts, Errors) {
  EXPECT_THROW(iteration_counts(1 << 16, 8, 1.0), Infeasible);
  EXPECT_THROW(iteration_counts(1 << 16, 1, 0.5), InvalidInstance);
  EXPECT_THROW(iteration_counts(100, 3, 0.5), InvalidInstance);
  EXPECT_THROW(iteration_counts(1 << 16, 4, -0.1), InvalidInstance);
}

TEST(IterationCounts, ExactThetaModeUsesTheRealAngle) {
  const std::uint64_t n = 1 << 10;
  const auto plan = iteration_counts(n, 4, 0.5, ThetaMode::exact);
  const double expected = kPi / 2 - (2.0 * plan.l1 + 1) * std::asin(1 / 32.0);
  EXPECT_NEAR(plan.breakdown.theta, expected, 1e-15);
}

TEST(RunPartialSearch, OptimizedK4) {
  const BlockConfig cfg(1 << 16, 4, 40000);
  const auto r = run_partial_search(cfg, optimize_epsilon(4).epsilon);
  EXPECT_GE(r.success_prob, 0.95);
  EXPECT_LE(static_cast<double>(r.queries), 0.625 * 256);
  EXPECT_EQ(r.queries, r.l1 + r.l2 + 1);
  EXPECT_EQ(r.predicted_block, cfg.target_block());
  double total = 0;
  for (double p : r.block_probs) total += p;
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(RunPartialSearch, RejectsSingleBlock) {
  EXPECT_THROW(run_partial_search(BlockConfig(64, 1, 0), 0.5), InvalidInstance);
}

TEST(RunPartialSearch, DenseMatchesReduced) {
  const BlockConfig cfg(4096, 2, 3001);
  const double eps = optimize_epsilon(2).epsilon;
  const auto dense = run_partial_search(cfg, eps, {Backend::dense});
  const auto reduced = run_partial_search(cfg, eps, {Backend::reduced});
  EXPECT_EQ(dense.queries, reduced.queries);
  EXPECT_NEAR(dense.success_prob, reduced.success_prob, 1e-10);
  EXPECT_NEAR(dense.target_prob, reduced.target_prob, 1e-10);
  for (std::size_t y = 0; y < 2; ++y) EXPECT_NEAR(dense.block_probs[y], reduced.block_probs[y], 1e-10);
  EXPECT_EQ(dense.backend, Backend::dense);
}

TEST(RunPartialSearch, DenseCapIsEnforced) {
  const BlockConfig cfg(1 << 12, 4, 0);
  RunOptions options{Backend::dense, 1 << 10};
  EXPECT_THROW(run_partial_search(cfg, 0.5, options), InvalidInstance);
}

TEST(RunPartialSearch, RelabelingWithinTheBlockChangesNothing) {
  const double eps = optimize_epsilon(4).epsilon;
  const auto a = run_partial_search(BlockConfig(1024, 4, 256), eps, {Backend::dense});
  const auto b = run_partial_search(BlockConfig(1024, 4, 511), eps, {Backend::dense});
  for (std::size_t y = 0; y < 4; ++y) EXPECT_NEAR(a.block_probs[y], b.block_probs[y], 1e-14);
}

TEST(RunPartialSearch, SuccessEnvelope) {
  for (std::uint64_t n : {std::uint64_t{1} << 16, std::uint64_t{1} << 18, std::uint64_t{1} << 20}) {
    for (int k : {2, 4, 8}) {
      const auto r = run_partial_search(BlockConfig(n, k, n / 3), optimize_epsilon(k).epsilon);
      EXPECT_GE(r.success_prob, 1 - 10 / std::sqrt(double(n))) << "n=" << n << " k=" << k;
    }
  }
}

TEST(RunPartialSearch, ExactModeAlsoSucceeds) {
  const auto r = run_partial_search(BlockConfig(1 << 12, 8, 77), optimize_epsilon(8).epsilon,
                                    {Backend::reduced, kDefaultDenseCap, ThetaMode::exact});
  EXPECT_GE(r.success_prob, 0.95);
}

TEST(RunFullGrover, Examples) {
  const BlockConfig cfg(1024, 2, 17);
  const auto best = run_full_grover(cfg, 25);
  const double closed = std::pow(std::sin(51 * std::asin(1 / 32.0)), 2);
  EXPECT_GE(best.target_prob, 0.999);
  EXPECT_NEAR(best.target_prob, closed, 1e-12);
  EXPECT_EQ(best.queries, 25u);
  EXPECT_NEAR(run_full_grover(cfg, 0).target_prob, 1 / 1024.0, 1e-15);
  EXPECT_LT(run_full_grover(cfg, 38).target_prob, best.target_prob);
  EXPECT_EQ(grover_optimal_steps(1024), 25u);
}

TEST(RunScript, TwelveItems) {
  const BlockConfig cfg(12, 3, 5);
  for (auto backend : {Backend::dense, Backend::reduced}) {
    const auto r = run_script(cfg, fig1_script(), {backend});
    EXPECT_EQ(r.queries, 2u);
    EXPECT_NEAR(r.success_prob, 1.0, 1e-12);
    EXPECT_NEAR(r.target_prob, 0.75, 1e-12);
    EXPECT_EQ(r.predicted_block, 1u);
  }
}

TEST(RunScript, EmptyAndDoubleOracle) {
  const BlockConfig cfg(16, 4, 9);
  const auto empty = run_script(cfg, PipelineScript{});
  EXPECT_EQ(empty.queries, 0u);
  EXPECT_NEAR(empty.target_prob, 1 / 16.0, 1e-15);
  const auto twice = run_script(cfg, PipelineScript({OperatorTag::oracle, OperatorTag::oracle}), {Backend::dense});
  EXPECT_EQ(twice.queries, 2u);
  for (double p : twice.block_probs) EXPECT_NEAR(p, 0.25, 1e-15);
}

TEST(PipelineScript, Step3Placement) {
  EXPECT_THROW(PipelineScript({OperatorTag::step3, OperatorTag::oracle}), InvalidInstance);
  EXPECT_THROW(PipelineScript({OperatorTag::step3, OperatorTag::step3}), InvalidInstance);
  EXPECT_NO_THROW(PipelineScript({OperatorTag::oracle, OperatorTag::step3}));
  EXPECT_EQ(partial_search_script(3, 2).query_count(), 6u);
  EXPECT_EQ(parse_operator("block_diffusion"), OperatorTag::block_diffusion);
  EXPECT_THROW(parse_operator("hadamard"), InvalidInstance);
}

}  // namespace
}  // namespace psearch
