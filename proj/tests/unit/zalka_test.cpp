#include "psearch/zalka.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "psearch/errors.hpp"
#include "psearch/partial_search.hpp"
#include "test_util.hpp"

namespace psearch {
namespace {

constexpr double kPi = std::numbers::pi;
using testing::random_state;

DenseState basis(std::uint64_t n, std::uint64_t x, double sign = 1.0) {
  std::vector<Amplitude> amps(n);
  amps[x] = {sign, 0};
  return DenseState(amps, n, false);
}

TEST(AngleDistance, Examples) {
  const auto u = uniform_state(8);
  EXPECT_NEAR(angle_distance(u, u), 0.0, 1e-7);
  EXPECT_NEAR(angle_distance(basis(8, 1), basis(8, 2)), kPi / 2, 1e-15);
  EXPECT_NEAR(angle_distance(basis(8, 3), basis(8, 3, -1.0)), 0.0, 1e-15);
}

TEST(AngleDistance, RejectsNonUnitAndMismatchedShapes) {
  EXPECT_THROW(angle_distance(uniform_state(8), uniform_state(16)), InvalidInstance);
  EXPECT_THROW(angle_distance(uniform_state(8), uniform_state(8, true)), InvalidInstance);
}

TEST(AngleDistance, TriangleInequality) {
  Rng rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto u = random_state(32, rng);
    const auto v = random_state(32, rng);
    const auto w = random_state(32, rng);
    const double uv = angle_distance(u, v);
    EXPECT_NEAR(uv, angle_distance(v, u), 1e-15);
    ASSERT_LE(angle_distance(u, w), uv + angle_distance(v, w) + 1e-9);
  }
}

TEST(ErrorBound, Examples) {
  const auto b = zalka_error_bound(10000, 0.01, 1.0);
  EXPECT_NEAR(b.queries, kPi / 4 * 100 * 0.8, 0.1);
  EXPECT_NEAR(b.queries, 62.8, 0.1);
  EXPECT_FALSE(b.regime_warning);

  const auto edge = zalka_error_bound(100, 0.1, 1.0);
  EXPECT_FALSE(edge.regime_warning);
  EXPECT_TRUE(zalka_error_bound(99, 0.1).regime_warning);
  EXPECT_TRUE(zalka_error_bound(1000, 0.2).regime_warning);

  const std::uint64_t big = std::uint64_t{1} << 60;
  EXPECT_NEAR(zalka_error_bound(big, 0.0, 3.0).queries / (kPi / 4 * std::sqrt(double(big))), 1.0, 1e-4);
  EXPECT_EQ(zalka_error_bound(100, 0.1, 50.0).queries, 0.0);
  EXPECT_THROW(zalka_error_bound(100, 0.1, 0.0), InvalidInstance);
}

TEST(ErrorBound, Monotonicity) {
  for (double err = 0; err < 0.1; err += 0.005)
    EXPECT_GT(zalka_error_bound(10000, err).queries, zalka_error_bound(10000, err + 0.005).queries);
  for (std::uint64_t n = 100; n < 1000000; n *= 3)
    EXPECT_LT(zalka_error_bound(n, 0.05).queries, zalka_error_bound(n * 3, 0.05).queries);
}

TEST(HybridTrajectory, EndpointsAreTheIdentityAndOracleRuns) {
  const BlockConfig cfg(16, 4, 6);
  const auto script = grover_script(3);
  const auto traj = build_hybrid_trajectory(cfg, script);
  ASSERT_EQ(traj.query_total, 3u);
  ASSERT_EQ(traj.finals.size(), 4u);
  ASSERT_EQ(traj.identity_run.size(), 4u);
  EXPECT_LE(testing::max_abs_diff(traj.finals.back(), run_dense(cfg, script)), 1e-15);
  EXPECT_LE(testing::max_abs_diff(traj.finals.front(), uniform_state(16)), 1e-15);
  for (const auto& s : traj.finals) EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
  for (double p : traj.probs) EXPECT_NEAR(p, 1 / 16.0, 1e-15);
}

TEST(Lemma2, FullGroverAllTargets) {
  const auto script = grover_script(grover_optimal_steps(16));
  for (std::uint64_t y = 0; y < 16; ++y) {
    const auto traj = build_hybrid_trajectory(BlockConfig(16, 1, y), script);
    for (double m : check_lemma2(traj)) EXPECT_GE(m, -1e-9) << "y=" << y;
  }
}

TEST(Lemma2, SingleQuery) {
  const auto traj = build_hybrid_trajectory(BlockConfig(16, 1, 3), grover_script(1));
  const auto margins = check_lemma2(traj);
  ASSERT_EQ(margins.size(), 1u);
  EXPECT_GE(margins[0], -1e-9);
}

TEST(Lemma2, UntouchedElementGivesZeroStep) {
  // Synthetic trajectory: the oracle query never sees y, so consecutive hybrid
  // finals coincide and the bound is 0.
  const BlockConfig cfg(4, 1, 2);
  const auto s = basis(4, 0);
  HybridTrajectory traj{cfg, grover_script(1), 1, {s, s}, {s, s}, {0.0, 0.0}};
  const auto margins = check_lemma2(traj);
  ASSERT_EQ(margins.size(), 1u);
  EXPECT_NEAR(margins[0], 0.0, 1e-9);
}

TEST(Lemma2, PartialSearchPipelineWithAncilla) {
  const std::uint64_t n = 64;
  const auto plan = iteration_counts(n, 4, optimize_epsilon(4).epsilon);
  const auto script = partial_search_script(plan.l1, plan.l2);
  for (std::uint64_t y : {0, 17, 63}) {
    const auto traj = build_hybrid_trajectory(BlockConfig(n, 4, y), script);
    for (double m : check_lemma2(traj)) EXPECT_GE(m, -1e-9);
  }
}

TEST(Lemma2, ChainTelescopes) {
  const auto script = grover_script(grover_optimal_steps(16));
  for (std::uint64_t y = 0; y < 16; ++y) {
    const auto traj = build_hybrid_trajectory(BlockConfig(16, 1, y), script);
    double budget = 0;
    for (std::uint64_t t = 0; t < traj.query_total; ++t) budget += 2 * std::asin(std::sqrt(traj.probs[t]));
    EXPECT_GE(budget + 1e-9, angle_distance(traj.finals.front(), traj.finals.back()));
  }
}

TEST(Lemma1, FullGroverDiagnostic) {
  const auto d = check_lemma1(BlockConfig(16, 1, 0), grover_script(grover_optimal_steps(16)));
  EXPECT_DOUBLE_EQ(d.reference, kPi / 2 * 16);
  EXPECT_GT(d.ratio(), 0.5);
  EXPECT_LT(d.ratio(), 1.1);
}

TEST(Lemma1, ZeroQueryAlgorithm) {
  const PipelineScript script({OperatorTag::global_diffusion, OperatorTag::block_diffusion});
  EXPECT_NEAR(check_lemma1(BlockConfig(16, 4, 0), script).sum_of_angles, 0.0, 1e-6);
}

TEST(Lemma1, FourAddressesByHand) {
  // Independent 4-dimensional Grover: two iterations, marked y versus none.
  const int steps = 2;
  double expected = 0;
  for (int y = 0; y < 4; ++y) {
    std::array<double, 4> marked{0.5, 0.5, 0.5, 0.5};
    for (int s = 0; s < steps; ++s) {
      marked[y] = -marked[y];
      const double mean = (marked[0] + marked[1] + marked[2] + marked[3]) / 4;
      for (auto& a : marked) a = 2 * mean - a;
    }
    const double overlap = 0.5 * (marked[0] + marked[1] + marked[2] + marked[3]);
    expected += std::acos(std::min(1.0, std::abs(overlap)));
  }
  const auto d = check_lemma1(BlockConfig(4, 1, 0), grover_script(steps));
  EXPECT_NEAR(d.sum_of_angles, expected, 1e-7);
}

TEST(Lemma3, UniformAttainsTheBound) {
  for (std::uint64_t n : {4, 16, 64}) {
    const double bound = n * std::asin(1 / std::sqrt(double(n)));
    EXPECT_NEAR(arcsin_sqrt_sum(std::vector<double>(n, 1.0 / n)), bound, 1e-12);
  }
}

TEST(Lemma3, PointMassBelowBound) {
  for (std::uint64_t n = 3; n <= 64; ++n) {
    std::vector<double> p(n, 0.0);
    p[0] = 1;
    EXPECT_LE(arcsin_sqrt_sum(p), n * std::asin(1 / std::sqrt(double(n))));
  }
}

TEST(Lemma3, SampledDistributionsNeverExceed) {
  for (std::uint64_t n : {4, 16, 64}) {
    const auto r = check_lemma3(n, 100000, 7);
    EXPECT_LE(r.max_sum, r.bound + 1e-9) << "n=" << n;
    EXPECT_NEAR(r.max_sum, r.bound, 1e-12);
    EXPECT_GT(r.points_checked, 100000u);
  }
}

TEST(Lemma3, ArcsinSqrtConcaveOnLowerHalf) {
  const double h = 1e-3;
  auto g = [](double x) { return std::asin(std::sqrt(x)); };
  for (int i = 1; i < 500; ++i) {
    const double x = i * h;
    EXPECT_LE(g(x - h) - 2 * g(x) + g(x + h), 1e-12) << "x=" << x;
  }
}

}  // namespace
}  // namespace psearch
