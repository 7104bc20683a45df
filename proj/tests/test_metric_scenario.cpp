#include <gtest/gtest.h>

#include <random>

#include "lexbap/scenario.hpp"
#include "test_support.hpp"

namespace lexbap {
namespace {

TEST(MetricDistance, BuiltInsOnTheThreeFourFiveTriangle) {
  const Point a{0, 0};
  const Point b{3, 4};
  EXPECT_DOUBLE_EQ(metric_distance(Metric::euclidean(), a, b), 5.0);
  EXPECT_DOUBLE_EQ(metric_distance(Metric::chebyshev(), a, b), 4.0);
  EXPECT_DOUBLE_EQ(metric_distance(Metric::manhattan(), a, b), 7.0);
}

TEST(MetricDistance, DimensionMismatchThrows) {
  EXPECT_THROW(metric_distance(Metric::euclidean(), Point{0, 0}, Point{1, 2, 3}),
               std::invalid_argument);
}

TEST(MetricDistance, TriangleInequalityOnRandomTriples) {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  const Metric metrics[] = {Metric::euclidean(), Metric::manhattan(),
                            Metric::chebyshev()};
  for (const Metric& metric : metrics) {
    for (int trial = 0; trial < 10000; ++trial) {
      const Point p{coord(rng), coord(rng), coord(rng)};
      const Point q{coord(rng), coord(rng), coord(rng)};
      const Point r{coord(rng), coord(rng), coord(rng)};
      const double direct = metric.distance(p, q);
      const double via = metric.distance(p, r) + metric.distance(r, q);
      ASSERT_LE(direct, via + 1e-9);
      ASSERT_GE(direct, 0.0);
      ASSERT_DOUBLE_EQ(direct, metric.distance(q, p));
    }
  }
}

TEST(CustomTable, AcceptsAValidTable) {
  const Metric metric = Metric::custom_table({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  EXPECT_DOUBLE_EQ(metric.distance(Point{0}, Point{2}), 2.0);
  EXPECT_DOUBLE_EQ(metric.distance(Point{1}, Point{1}), 0.0);
}

TEST(CustomTable, RejectsBrokenTables) {
  // Triangle violation: d(0,2) = 5 > d(0,1) + d(1,2) = 2.
  EXPECT_THROW(Metric::custom_table({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}),
               std::invalid_argument);
  EXPECT_THROW(Metric::custom_table({{0, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(Metric::custom_table({{1, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Metric::custom_table({{0, -1}, {-1, 0}}), std::invalid_argument);
  EXPECT_THROW(Metric::custom_table({{0, 1}}), std::invalid_argument);
}

TEST(CustomTable, RejectsNonIndexPoints) {
  const Metric metric = Metric::custom_table({{0, 1}, {1, 0}});
  EXPECT_THROW(metric.distance(Point{0.5}, Point{1}), std::invalid_argument);
  EXPECT_THROW(metric.distance(Point{2}, Point{0}), std::invalid_argument);
  EXPECT_THROW(metric.distance(Point{0, 1}, Point{0, 1}), std::invalid_argument);
}

TEST(BuildWeights, TwoAgentsOneTarget) {
  Scenario scenario;
  scenario.dim = 2;
  scenario.initial_positions = {{0, 0}, {10, 0}};
  scenario.targets = {{0, 5}};
  scenario.horizon = 1.0;
  const WeightMatrix w = build_weights(scenario);
  EXPECT_DOUBLE_EQ(w(0, 0), 5.0);
  EXPECT_DOUBLE_EQ(w(1, 0), std::sqrt(125.0));
}

TEST(BuildWeights, CoincidentAgentAndTargetGiveZero) {
  Scenario scenario;
  scenario.dim = 2;
  scenario.initial_positions = {{3, 4}, {10, 0}};
  scenario.targets = {{3, 4}};
  scenario.horizon = 1.0;
  EXPECT_DOUBLE_EQ(build_weights(scenario)(0, 0), 0.0);
}

TEST(BuildWeights, MatchesAnIndependentRecomputation) {
  std::mt19937 rng(103);
  const Scenario scenario = testing::random_planar_scenario(rng, 5, 4);
  const WeightMatrix w = build_weights(scenario);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double dx = scenario.initial_positions[i][0] - scenario.targets[j][0];
      const double dy = scenario.initial_positions[i][1] - scenario.targets[j][1];
      EXPECT_DOUBLE_EQ(w(i, j), std::sqrt(dx * dx + dy * dy));
    }
  }
}

TEST(BuildWeights, AgentReorderingPermutesRows) {
  std::mt19937 rng(107);
  Scenario scenario = testing::random_planar_scenario(rng, 4, 3);
  const WeightMatrix before = build_weights(scenario);
  std::swap(scenario.initial_positions[0], scenario.initial_positions[2]);
  const WeightMatrix after = build_weights(scenario);
  for (int j = 0; j < 3; ++j) {
    EXPECT_DOUBLE_EQ(after(0, j), before(2, j));
    EXPECT_DOUBLE_EQ(after(2, j), before(0, j));
    EXPECT_DOUBLE_EQ(after(1, j), before(1, j));
  }
}

TEST(ScenarioValidate, RejectsBadShapes) {
  Scenario scenario;
  scenario.dim = 2;
  scenario.initial_positions = {{0, 0}};
  scenario.targets = {{1, 1}};
  scenario.horizon = 1.0;
  EXPECT_THROW(scenario.validate(), std::invalid_argument);  // single agent

  scenario.initial_positions = {{0, 0}, {1, 0}};
  scenario.targets = {{1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(scenario.validate(), std::invalid_argument);  // more tasks than agents

  scenario.targets = {{1, 1}};
  scenario.horizon = 0.0;
  EXPECT_THROW(scenario.validate(), std::invalid_argument);  // horizon

  scenario.horizon = 1.0;
  scenario.initial_positions = {{0, 0}, {1, 0, 0}};
  EXPECT_THROW(scenario.validate(), std::invalid_argument);  // ragged dims
}

TEST(SafetySpec, PairwiseMatrixBoundIsTheLargestEntry) {
  const SafetySpec safety =
      SafetySpec::pairwise({{0, 2, 3}, {2, 0, 1}, {3, 1, 0}});
  EXPECT_FALSE(safety.is_uniform());
  EXPECT_DOUBLE_EQ(safety.between(0, 2), 3.0);
  EXPECT_DOUBLE_EQ(safety.between(2, 1), 1.0);
  EXPECT_DOUBLE_EQ(safety.bound(), 3.0);
}

TEST(SafetySpec, RejectsAsymmetry) {
  EXPECT_THROW(SafetySpec::pairwise({{0, 2}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(SafetySpec::uniform(-1.0), std::invalid_argument);
}

}  // namespace
}  // namespace lexbap
