// Acceptance suite: every release criterion in one binary, one verdict line
// per criterion. Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexbap/io.hpp"
#include "lexbap/oracle.hpp"

namespace lexbap {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

WeightMatrix reference_4x3() {
  return WeightMatrix::from_rows({{4, 9, 2}, {8, 4, 6}, {7, 9, 8}, {2, 7, 3}});
}

// ---------------------------------------------------------------------------
// 1. Worked-example reconstruction, integer exact.
Outcome criterion1() {
  Outcome outcome;
  const WeightMatrix w = reference_4x3();
  const SubgraphSpec full = SubgraphSpec::full_graph(w);

  // The matrix itself is validated by exhaustive lexicographic enumeration.
  const BruteLexResult brute = brute_lex_optimal(w);
  outcome.expect(brute.sequence == std::vector<double>({4, 2, 2}),
                 "brute-force sequence is not (4,2,2)");
  outcome.expect(brute.optima.size() == 1 &&
                     brute.optima.front().pairs == EdgeList({{0, 2}, {1, 1}, {3, 0}}),
                 "brute-force optimum mismatch");

  outcome.expect(bottleneck_value(full, w) == 4.0, "B != 4");
  outcome.expect(bottleneck_edges(full, w) == EdgeList({{0, 0}, {1, 1}}),
                 "bottleneck edge set mismatch");
  outcome.expect(bottleneck_value(full.without_edge({0, 0}), w) == 4.0,
                 "B without (a1,t1) != 4");
  outcome.expect(bottleneck_value(full.without_edge({1, 1}), w) == 7.0,
                 "B without (a2,t2) != 7");

  const auto first = max_margin_edges_and_margin(full, w);
  outcome.expect(first.edges == EdgeList({{1, 1}}) && first.margin.value() == 3.0,
                 "first-order margin != 3");

  const SubgraphSpec second = SubgraphSpec::complete({0, 2, 3}, {0, 2});
  outcome.expect(bottleneck_value(second, w) == 2.0, "second-order B != 2");
  const auto second_margin = max_margin_edges_and_margin(second, w);
  outcome.expect(second_margin.edges == EdgeList({{0, 2}, {3, 0}}),
                 "second-order max-margin edges mismatch");
  outcome.expect(second_margin.margin.value() == 2.0, "second-order margin != 2");

  const SequentialResult result = sequential_assign(w);
  outcome.expect(result.orders.size() == 3, "order count");
  outcome.expect(result.orders[2].edge == Edge({0, 2}) &&
                     result.orders[2].margin.value() == 6.0,
                 "third-order edge or margin mismatch");
  std::vector<double> sequence;
  for (const OrderRecord& order : result.orders) sequence.push_back(order.weight);
  outcome.expect(sequence == std::vector<double>({4, 2, 2}), "sequence != (4,2,2)");
  outcome.expect(result.unassigned_agents == std::vector<int>({2}),
                 "unassigned agent != a3");

  // Switch-bound witnesses quoted for the example.
  const Edge e1 = result.orders[0].edge;
  const Edge e2 = result.orders[1].edge;
  const Edge e3 = result.orders[2].edge;
  outcome.expect(std::max(w(e1.agent, e2.task), w(e2.agent, e1.task)) == 8.0,
                 "switch witness (1,2) != 8");
  outcome.expect(std::max(w(e1.agent, e3.task), w(e3.agent, e1.task)) == 9.0,
                 "switch witness (1,3) != 9");
  outcome.expect(std::max(w(e2.agent, e3.task), w(e3.agent, e2.task)) == 4.0,
                 "switch witness (2,3) != 4");
  outcome.expect(check_prop2(result, w).empty(), "prop2 violations");

  outcome.expect(w(2, e1.task) == 9.0 && w(2, e2.task) == 7.0 && w(2, e3.task) == 8.0,
                 "unassigned witnesses != (9,7,8)");
  outcome.expect(check_prop3(result, w).empty(), "prop3 violations");
  return outcome;
}

// ---------------------------------------------------------------------------
// 2. Case-study bound limits within the published rounding.
Outcome criterion2() {
  Outcome outcome;
  const std::vector<Edge> edges{{4, 0}, {3, 4}, {0, 2}, {1, 1}, {2, 5}, {6, 3}};
  const std::vector<double> weights{87.95, 78.67, 73.53, 64.56, 60.53, 59.08};
  const std::vector<double> margins{10.78, 9.99, 9.02, 27.82, 21.30, 23.38};
  std::vector<double> data(8 * 6, 150.0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    data[static_cast<std::size_t>(edges[k].agent) * 6 + edges[k].task] = weights[k];
  }
  const WeightMatrix w(8, 6, std::move(data));
  SequentialResult result;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    result.orders.push_back({edges[k], weights[k], Margin::finite(margins[k]), 1});
    result.assignment.pairs.push_back(edges[k]);
  }
  result.assignment.sort();
  result.unassigned_agents = {5, 7};

  const SafeSchedule schedule = build_schedule(result, w, 3.0, 10.0);
  outcome.expect(std::abs(schedule.mu - 9.02) < 1e-12, "mu != 9.02");
  const std::vector<double> expected{92.72, 82.64, 76.54, 76.54, 75.83, 75.83};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    std::ostringstream what;
    what << "A_" << k + 1 << " = " << schedule.saturation[k] << " not within 0.02 of "
         << expected[k];
    outcome.expect(std::abs(schedule.saturation[k] - expected[k]) <= 0.02, what.str());
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// 3 & 4. Oracle equivalence and the propositions over 1000 shared instances.
std::vector<WeightMatrix> shared_instances() {
  std::mt19937 rng(20250809);
  std::vector<WeightMatrix> instances;
  instances.reserve(1000);
  std::uniform_int_distribution<int> m_dist(2, 6);
  std::uniform_int_distribution<int> weight(0, 20);
  for (int k = 0; k < 1000; ++k) {
    const int m = m_dist(rng);
    std::uniform_int_distribution<int> n_dist(1, m);
    const int n = n_dist(rng);
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(m) * n);
    for (int c = 0; c < m * n; ++c) data.push_back(weight(rng));
    instances.emplace_back(m, n, std::move(data));
  }
  return instances;
}

Outcome criterion3(const std::vector<WeightMatrix>& instances) {
  Outcome outcome;
  int robust_count = 0;
  for (const WeightMatrix& w : instances) {
    const SubgraphSpec full = SubgraphSpec::full_graph(w);
    if (bottleneck_value(full, w) != brute_bottleneck(full, w)) {
      outcome.expect(false, "bottleneck mismatch");
      continue;
    }
    ++outcome.checks;
    const SequentialResult result = sequential_assign(w);
    if (!is_robust_lexicographic(result)) continue;
    ++robust_count;
    const BruteLexResult brute = brute_lex_optimal(w);
    std::vector<double> sequence = assigned_weight_sequence(result.assignment, w);
    outcome.expect(lex_compare(sequence, brute.sequence) == LexOrder::equal,
                   "robust sequence differs from the brute-force optimum");
    outcome.expect(brute.optima.size() == 1, "robust optimum is not unique");
    outcome.expect(result.assignment == brute.optima.front(),
                   "robust assignment differs from the brute-force optimum");
  }
  outcome.detail = std::to_string(robust_count) + " robust of 1000";
  return outcome;
}

Outcome criterion4(const std::vector<WeightMatrix>& instances) {
  Outcome outcome;
  int pinned = 0;
  for (const WeightMatrix& w : instances) {
    const SequentialResult result = sequential_assign(w);
    outcome.expect(check_prop2(result, w).empty(), "prop2 violation");
    outcome.expect(check_prop3(result, w).empty(), "prop3 violation");

    const SubgraphSpec full = SubgraphSpec::full_graph(w);
    const auto max_margin = max_margin_edges_and_margin(full, w);
    if (!max_margin.margin.is_positive()) continue;
    ++pinned;
    const double value = bottleneck_value(full, w);
    enumerate_admissible(w.agent_count(), w.task_count(), full.edges,
                         [&](const Assignment& assignment) {
      double max_weight = 0.0;
      for (const Edge& pair : assignment.pairs) {
        max_weight = std::max(max_weight, w(pair.agent, pair.task));
      }
      if (max_weight != value) return;
      for (const Edge& pinned_edge : max_margin.edges) {
        if (!assignment.contains(pinned_edge)) {
          outcome.expect(false, "optimal assignment misses a max-margin edge");
        }
      }
    });
  }
  outcome.detail = std::to_string(pinned) + " instances with a positive margin";
  return outcome;
}

// ---------------------------------------------------------------------------
// 5 & 6. End-to-end separation and nonemptiness over 100 seeded scenarios.
struct EndToEnd {
  Outcome separation;
  Outcome nonemptiness;
};

EndToEnd criterion5and6() {
  EndToEnd result;
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> coord(0.0, 200.0);
  std::uniform_int_distribution<int> m_dist(4, 8);
  int in_set_runs = 0;

  for (int run = 0; run < 100; ++run) {
    Scenario scenario;
    WeightMatrix weights(2, 1, {0.0, 0.0});
    SequentialResult assigned;
    for (;;) {
      scenario = Scenario{};
      scenario.dim = 2;
      const int m = m_dist(rng);
      std::uniform_int_distribution<int> n_dist(2, m);
      const int n = n_dist(rng);
      for (int i = 0; i < m; ++i) {
        scenario.initial_positions.push_back({coord(rng), coord(rng)});
      }
      for (int j = 0; j < n; ++j) scenario.targets.push_back({coord(rng), coord(rng)});
      scenario.safety = SafetySpec::uniform(3.0);
      scenario.horizon = 1.0;  // placeholder until the weights are known

      weights = build_weights(scenario);
      assigned = sequential_assign(weights);
      if (!is_robust_lexicographic(assigned)) continue;
      double mu = std::numeric_limits<double>::infinity();
      double longest = 0.0;
      for (const OrderRecord& order : assigned.orders) {
        if (!order.margin.is_infinite()) mu = std::min(mu, order.margin.value());
        longest = std::max(longest, order.weight);
      }
      if (!(3.0 < mu)) continue;
      scenario.horizon = longest / 5.0 + 4.0;
      break;
    }

    SimConfig config;
    config.dt = 0.01;
    config.v_ref = 5.0;
    config.v_max = 7.5;
    config.omega_max = 4.0;
    config.k_heading = 4.0;
    config.k_speed = 1.5;
    config.disturbance_amplitude = 0.02;
    config.heading_offset = 0.3;
    config.rng_seed = 1000 + static_cast<std::uint64_t>(run);

    const SafeSchedule schedule =
        build_schedule(assigned, weights, scenario, config.v_ref);
    const auto trajectories = simulate(scenario, assigned, config);
    const VerificationReport report =
        verify_run(trajectories, schedule, scenario, config.v_max);

    result.separation.expect(report.implication_holds, "implication cross-check failed");
    if (report.all_in_sets) {
      ++in_set_runs;
      std::ostringstream what;
      what << "run " << run << ": contained run with min pair distance "
           << report.min_pair_distance;
      result.separation.expect(report.min_pair_distance > 3.0, what.str());
      result.separation.expect(report.no_collisions, "contained run with a collision");
    }

    const std::vector<bool> nonempty = nonemptiness_check(schedule, scenario, 0.05);
    for (int agent = 0; agent < scenario.agent_count(); ++agent) {
      std::ostringstream what;
      what << "run " << run << ": agent " << agent << " radii sum dropped to its weight";
      result.nonemptiness.expect(nonempty[agent], what.str());
    }
  }
  result.separation.detail =
      std::to_string(in_set_runs) + " of 100 runs fully inside their sets";
  return result;
}

// ---------------------------------------------------------------------------
// 7. Runtime of the full sequential solve at m = n = 100 and its scaling.
double time_sequential(int size, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 100.0);
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(size) * size);
  for (int k = 0; k < size * size; ++k) data.push_back(weight(rng));
  const WeightMatrix w(size, size, std::move(data));

  double best = std::numeric_limits<double>::infinity();
  for (int repeat = 0; repeat < 3; ++repeat) {
    const auto start = std::chrono::steady_clock::now();
    const SequentialResult result = sequential_assign(w);
    const auto stop = std::chrono::steady_clock::now();
    if (result.orders.size() != static_cast<std::size_t>(size)) return -1.0;
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

Outcome criterion7() {
  Outcome outcome;
  const double t50 = time_sequential(50, 7001);
  const double t100 = time_sequential(100, 7002);
  std::ostringstream detail;
  detail << "t(50) = " << t50 << " s, t(100) = " << t100 << " s, ratio = "
         << t100 / t50;
  outcome.detail = detail.str();
  outcome.expect(t50 > 0.0 && t100 > 0.0, "solver returned a malformed result");
  outcome.expect(t100 < 5.0, "m = n = 100 exceeded 5 s");
  outcome.expect(t100 / t50 <= 16.0, "doubling n from 50 scaled worse than 16x");
  return outcome;
}

struct Row {
  int number;
  std::string name;
  Outcome outcome;
  double seconds;
  std::string budget;
};

}  // namespace
}  // namespace lexbap

int main() {
  using namespace lexbap;
  std::vector<Row> rows;

  const auto timed = [&](int number, const std::string& name, const std::string& budget,
                         double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = body();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0.0 && seconds >= limit) {
      outcome.pass = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over budget");
    }
    rows.push_back({number, name, std::move(outcome), seconds, budget});
  };

  timed(1, "worked-example reconstruction", "< 1 s", 1.0, criterion1);
  timed(2, "case-study bound limits (+/- 0.02)", "< 1 s", 1.0, criterion2);

  const std::vector<WeightMatrix> instances = shared_instances();
  timed(3, "oracle equivalence on 1000 random instances", "< 60 s", 60.0,
        [&] { return criterion3(instances); });
  timed(4, "propositions as properties on the same instances", "", 0.0,
        [&] { return criterion4(instances); });

  {
    const auto start = std::chrono::steady_clock::now();
    EndToEnd end_to_end = criterion5and6();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 300.0) {
      end_to_end.separation.pass = false;
      end_to_end.separation.detail += "; over budget";
    }
    rows.push_back({5, "end-to-end separation on 100 seeded scenarios",
                    std::move(end_to_end.separation), seconds, "< 300 s"});
    rows.push_back({6, "safe-set nonemptiness in the same scenarios",
                    std::move(end_to_end.nonemptiness), 0.0, ""});
  }

  timed(7, "sequential solve runtime and scaling", "< 5 s at n = 100", 0.0, criterion7);

  Outcome substitution;
  substitution.detail =
      "published trajectories are not reproducible (initial positions unpublished); "
      "criteria 5-6 substitute property-based acceptance";
  rows.push_back({8, "case-study trajectory substitution", substitution, 0.0, ""});

  int failures = 0;
  for (const Row& row : rows) {
    const bool pass = row.outcome.pass;
    failures += pass ? 0 : 1;
    std::printf("criterion %d [%s] %s", row.number, pass ? "PASS" : "FAIL",
                row.name.c_str());
    if (!row.outcome.detail.empty()) std::printf(" -- %s", row.outcome.detail.c_str());
    if (row.seconds > 0.0) std::printf(" (%.2f s%s%s)", row.seconds,
                                       row.budget.empty() ? "" : ", budget ",
                                       row.budget.c_str());
    std::printf("\n");
  }
  return failures;
}
