#include "lexbap/bottleneck.hpp"

#include <algorithm>
#include <utility>

namespace lexbap {
namespace {

constexpr Edge kNoEdge{-1, -1};

// Subgraph renumbered to dense indices, with per-task adjacency sorted by
// (weight, agent) so a weight threshold is an adjacency prefix.
struct CompactGraph {
  std::vector<int> agent_ids;  // compact agent -> original
  std::vector<int> task_ids;   // compact task -> original
  std::vector<std::vector<std::pair<double, int>>> adj;
  std::vector<double> thresholds;  // sorted distinct edge weights
};

CompactGraph make_compact(const SubgraphSpec& spec, const WeightMatrix& w) {
  CompactGraph g;
  g.agent_ids = spec.agents;
  g.task_ids = spec.tasks;
  std::vector<int> agent_pos(w.agent_count(), -1);
  std::vector<int> task_pos(w.task_count(), -1);
  for (std::size_t i = 0; i < spec.agents.size(); ++i) agent_pos[spec.agents[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < spec.tasks.size(); ++j) task_pos[spec.tasks[j]] = static_cast<int>(j);

  g.adj.resize(spec.tasks.size());
  g.thresholds.reserve(spec.edges.size());
  for (const Edge& e : spec.edges) {
    const double weight = w(e.agent, e.task);
    g.adj[task_pos[e.task]].emplace_back(weight, agent_pos[e.agent]);
    g.thresholds.push_back(weight);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  std::sort(g.thresholds.begin(), g.thresholds.end());
  g.thresholds.erase(std::unique(g.thresholds.begin(), g.thresholds.end()),
                     g.thresholds.end());
  return g;
}

// Kuhn's augmenting path from one task, restricted to edges with weight
// <= limit and skipping `skip` (compact indices).
bool augment(const CompactGraph& g, int task, double limit, Edge skip,
             std::vector<char>& visited, std::vector<int>& agent_match) {
  for (const auto& [weight, agent] : g.adj[task]) {
    if (weight > limit) break;
    if (agent == skip.agent && task == skip.task) continue;
    if (visited[agent]) continue;
    visited[agent] = 1;
    if (agent_match[agent] < 0 ||
        augment(g, agent_match[agent], limit, skip, visited, agent_match)) {
      agent_match[agent] = task;
      return true;
    }
  }
  return false;
}

// Task-saturating matching feasibility at a weight threshold. Optionally
// returns the matching (compact agent -> compact task, -1 when unmatched).
bool feasible_at(const CompactGraph& g, double limit, Edge skip,
                 std::vector<int>* matching = nullptr) {
  std::vector<int> agent_match(g.agent_ids.size(), -1);
  std::vector<char> visited(g.agent_ids.size(), 0);
  for (std::size_t task = 0; task < g.task_ids.size(); ++task) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(g, static_cast<int>(task), limit, skip, visited, agent_match)) {
      return false;
    }
  }
  if (matching) *matching = std::move(agent_match);
  return true;
}

// Smallest threshold in g.thresholds admitting a task-saturating matching.
// Every task needs at least its cheapest usable edge, so the search starts
// at the largest of those per-task minima.
double search_bottleneck(const CompactGraph& g, Edge skip) {
  double per_task_floor = 0.0;
  for (std::size_t task = 0; task < g.adj.size(); ++task) {
    double cheapest = -1.0;
    for (const auto& [weight, agent] : g.adj[task]) {
      if (static_cast<int>(task) == skip.task && agent == skip.agent) continue;
      cheapest = weight;
      break;
    }
    if (cheapest < 0.0) throw InfeasibleError("a task has no usable edge");
    per_task_floor = std::max(per_task_floor, cheapest);
  }

  const auto& ws = g.thresholds;
  std::size_t lo = std::lower_bound(ws.begin(), ws.end(), per_task_floor) - ws.begin();
  std::size_t hi = ws.size() - 1;
  if (!feasible_at(g, ws[hi], skip)) {
    throw InfeasibleError("no admissible assignment exists for the subgraph");
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible_at(g, ws[mid], skip)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return ws[lo];
}

EdgeList edges_at_value(const SubgraphSpec& spec, const WeightMatrix& w, double value) {
  EdgeList result;
  for (const Edge& e : spec.edges) {
    if (weights_equal(w(e.agent, e.task), value)) result.push_back(e);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Edge to_compact(const CompactGraph& g, const Edge& e) {
  const auto agent_it = std::find(g.agent_ids.begin(), g.agent_ids.end(), e.agent);
  const auto task_it = std::find(g.task_ids.begin(), g.task_ids.end(), e.task);
  return {static_cast<int>(agent_it - g.agent_ids.begin()),
          static_cast<int>(task_it - g.task_ids.begin())};
}

}  // namespace

bool admissible(const Assignment& assignment, const SubgraphSpec& spec) {
  EdgeList permitted = spec.edges;
  std::sort(permitted.begin(), permitted.end());
  const auto permits = [&](const Edge& e) {
    return std::binary_search(permitted.begin(), permitted.end(), e);
  };

  // Exactly one permitted pair per task, at most one per agent; pairs
  // outside the subgraph are unconstrained.
  for (int task : spec.tasks) {
    int covered = 0;
    for (const Edge& pair : assignment.pairs) {
      if (pair.task == task && permits(pair)) ++covered;
    }
    if (covered != 1) return false;
  }
  for (int agent : spec.agents) {
    int used = 0;
    for (const Edge& pair : assignment.pairs) {
      if (pair.agent == agent && permits(pair)) ++used;
    }
    if (used > 1) return false;
  }
  return true;
}

double assignment_max_weight(const Assignment& assignment, const SubgraphSpec& spec,
                             const WeightMatrix& w) {
  if (!admissible(assignment, spec)) {
    throw std::invalid_argument("assignment is not admissible for the subgraph");
  }
  EdgeList permitted = spec.edges;
  std::sort(permitted.begin(), permitted.end());
  double max_weight = 0.0;
  for (const Edge& pair : assignment.pairs) {
    if (std::binary_search(permitted.begin(), permitted.end(), pair)) {
      max_weight = std::max(max_weight, w(pair.agent, pair.task));
    }
  }
  return max_weight;
}

double bottleneck_value(const SubgraphSpec& spec, const WeightMatrix& w) {
  spec.validate(w);
  if (spec.edges.empty()) throw InfeasibleError("subgraph has no edges");
  return search_bottleneck(make_compact(spec, w), kNoEdge);
}

Assignment min_bottleneck_assignment(const SubgraphSpec& spec, const WeightMatrix& w) {
  spec.validate(w);
  if (spec.edges.empty()) throw InfeasibleError("subgraph has no edges");
  const CompactGraph g = make_compact(spec, w);
  const double value = search_bottleneck(g, kNoEdge);
  std::vector<int> matching;
  feasible_at(g, value, kNoEdge, &matching);
  Assignment result;
  for (std::size_t agent = 0; agent < matching.size(); ++agent) {
    if (matching[agent] >= 0) {
      result.pairs.push_back({g.agent_ids[agent], g.task_ids[matching[agent]]});
    }
  }
  result.sort();
  return result;
}

EdgeList bottleneck_edges(const SubgraphSpec& spec, const WeightMatrix& w) {
  return edges_at_value(spec, w, bottleneck_value(spec, w));
}

BottleneckSolve bottleneck_solve(const SubgraphSpec& spec, const WeightMatrix& w) {
  spec.validate(w);
  if (!spec.is_complete_bipartite()) {
    throw std::invalid_argument("margin operators need a complete bipartite subgraph");
  }

  BottleneckSolve solve;
  BottleneckSummary& summary = solve.summary;
  if (spec.agents.size() == 1 && spec.tasks.size() == 1) {
    // Singleton subgraph: the lone edge is the maximum-margin edge and the
    // margin is infinite by definition.
    summary.value = w(spec.edges.front().agent, spec.edges.front().task);
    summary.bottleneck_edges = {spec.edges.front()};
    summary.max_margin_edges = {spec.edges.front()};
    summary.margin = Margin::infinity();
    solve.representative.pairs = {spec.edges.front()};
    return solve;
  }

  const CompactGraph g = make_compact(spec, w);
  summary.value = search_bottleneck(g, kNoEdge);
  summary.bottleneck_edges = edges_at_value(spec, w, summary.value);

  std::vector<int> matching;
  feasible_at(g, summary.value, kNoEdge, &matching);
  for (std::size_t agent = 0; agent < matching.size(); ++agent) {
    if (matching[agent] >= 0) {
      solve.representative.pairs.push_back(
          {g.agent_ids[agent], g.task_ids[matching[agent]]});
    }
  }
  solve.representative.sort();

  // Margin: the largest increase of the bottleneck over single removals of
  // bottleneck edges; the argmax edges are the maximum-margin set.
  std::vector<double> raised;
  raised.reserve(summary.bottleneck_edges.size());
  double best = summary.value;
  for (const Edge& e : summary.bottleneck_edges) {
    const double value_without = search_bottleneck(g, to_compact(g, e));
    raised.push_back(value_without);
    best = std::max(best, value_without);
  }
  for (std::size_t k = 0; k < raised.size(); ++k) {
    if (weights_equal(raised[k], best)) {
      summary.max_margin_edges.push_back(summary.bottleneck_edges[k]);
    }
  }
  summary.margin = weights_equal(best, summary.value)
                       ? Margin::finite(0.0)
                       : Margin::finite(best - summary.value);
  return solve;
}

BottleneckSummary bottleneck_summary(const SubgraphSpec& spec, const WeightMatrix& w) {
  return bottleneck_solve(spec, w).summary;
}

MaxMarginResult max_margin_edges_and_margin(const SubgraphSpec& spec,
                                            const WeightMatrix& w) {
  BottleneckSummary summary = bottleneck_summary(spec, w);
  return {std::move(summary.max_margin_edges), summary.margin};
}

}  // namespace lexbap
