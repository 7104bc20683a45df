#include "lexbap/sequential.hpp"

#include <algorithm>
#include <numeric>

namespace lexbap {
namespace {

bool task_agent_less(const Edge& a, const Edge& b) {
  if (a.task != b.task) return a.task < b.task;
  return a.agent < b.agent;
}

}  // namespace

SequentialResult sequential_assign(const WeightMatrix& w, TieBreak tie_break) {
  std::vector<int> agents(w.agent_count());
  std::vector<int> tasks(w.task_count());
  std::iota(agents.begin(), agents.end(), 0);
  std::iota(tasks.begin(), tasks.end(), 0);

  SequentialResult result;
  result.orders.reserve(tasks.size());
  for (int k = 0; k < w.task_count(); ++k) {
    const SubgraphSpec spec = SubgraphSpec::complete(agents, tasks);
    const BottleneckSolve solve = bottleneck_solve(spec, w);
    const BottleneckSummary& summary = solve.summary;

    // Only max-margin edges inside an optimising assignment keep the
    // remaining subgraphs' bottlenecks from growing. With a positive margin
    // that is every max-margin edge; with a zero margin the representative
    // always contributes at least one.
    EdgeList candidates;
    for (const Edge& e : summary.max_margin_edges) {
      if (solve.representative.contains(e)) candidates.push_back(e);
    }
    if (candidates.empty()) candidates = summary.max_margin_edges;

    const Edge chosen =
        tie_break == TieBreak::lowest
            ? *std::min_element(candidates.begin(), candidates.end(), task_agent_less)
            : *std::max_element(candidates.begin(), candidates.end(), task_agent_less);

    result.orders.push_back({chosen, w(chosen.agent, chosen.task), summary.margin,
                             static_cast<int>(summary.max_margin_edges.size())});
    std::erase(agents, chosen.agent);
    std::erase(tasks, chosen.task);
  }

  for (const OrderRecord& order : result.orders) {
    result.assignment.pairs.push_back(order.edge);
  }
  result.assignment.sort();
  result.unassigned_agents = agents;  // already ascending
  return result;
}

bool is_robust_lexicographic(const SequentialResult& result) {
  return std::all_of(result.orders.begin(), result.orders.end(),
                     [](const OrderRecord& order) { return order.margin.is_positive(); });
}

std::vector<Prop2Violation> check_prop2(const SequentialResult& result,
                                        const WeightMatrix& w) {
  std::vector<Prop2Violation> violations;
  const int n = static_cast<int>(result.orders.size());
  for (int a = 0; a < n - 1; ++a) {
    // The inequality is only guaranteed for strictly positive finite
    // margins; zero-margin orders carry no switch bound.
    if (result.orders[a].margin.is_infinite() ||
        !result.orders[a].margin.is_positive()) {
      continue;
    }
    const double lhs = result.orders[a].weight + result.orders[a].margin.value();
    const Edge ea = result.orders[a].edge;
    for (int b = a + 1; b < n; ++b) {
      const Edge eb = result.orders[b].edge;
      const double rhs = std::max(w(ea.agent, eb.task), w(eb.agent, ea.task));
      if (lhs > rhs && !weights_equal(lhs, rhs)) {
        violations.push_back({a + 1, b + 1, lhs, rhs});
      }
    }
  }
  return violations;
}

std::vector<Prop3Violation> check_prop3(const SequentialResult& result,
                                        const WeightMatrix& w) {
  std::vector<Prop3Violation> violations;
  const int n = static_cast<int>(result.orders.size());
  for (int a = 0; a < n; ++a) {
    if (result.orders[a].margin.is_infinite() ||
        !result.orders[a].margin.is_positive()) {
      continue;
    }
    const double lhs = result.orders[a].weight + result.orders[a].margin.value();
    const int task = result.orders[a].edge.task;
    for (int agent : result.unassigned_agents) {
      const double rhs = w(agent, task);
      if (lhs > rhs && !weights_equal(lhs, rhs)) {
        violations.push_back({a + 1, agent, lhs, rhs});
      }
    }
  }
  return violations;
}

LexOrder lex_compare(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("lex_compare needs sequences of equal length");
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (weights_equal(a[k], b[k])) continue;
    return a[k] < b[k] ? LexOrder::less : LexOrder::greater;
  }
  return LexOrder::equal;
}

}  // namespace lexbap
