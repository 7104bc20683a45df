#include "lexbap/oracle.hpp"

#include <algorithm>
#include <string>

namespace lexbap {
namespace {

void enumerate_recursive(int task, int n,
                         const std::vector<std::vector<int>>& agents_for_task,
                         std::vector<char>& agent_used, EdgeList& partial,
                         const std::function<void(const Assignment&)>& sink) {
  if (task == n) {
    Assignment assignment{partial};
    assignment.sort();
    sink(assignment);
    return;
  }
  for (int agent : agents_for_task[task]) {
    if (agent_used[agent]) continue;
    agent_used[agent] = 1;
    partial.push_back({agent, task});
    enumerate_recursive(task + 1, n, agents_for_task, agent_used, partial, sink);
    partial.pop_back();
    agent_used[agent] = 0;
  }
}

}  // namespace

void enumerate_admissible(int m, int n, const EdgeList& edges,
                          const std::function<void(const Assignment&)>& sink) {
  if (m > kOracleAgentLimit) {
    throw SizeGuardError("oracle enumeration limited to " +
                         std::to_string(kOracleAgentLimit) + " agents, got " +
                         std::to_string(m));
  }
  if (n < 1 || m < n) throw std::invalid_argument("need 1 <= tasks <= agents");

  std::vector<std::vector<int>> agents_for_task(n);
  for (const Edge& e : edges) {
    if (e.agent < 0 || e.agent >= m || e.task < 0 || e.task >= n) {
      throw std::invalid_argument("edge outside the index ranges");
    }
    agents_for_task[e.task].push_back(e.agent);
  }
  for (auto& list : agents_for_task) std::sort(list.begin(), list.end());

  std::vector<char> agent_used(m, 0);
  EdgeList partial;
  enumerate_recursive(0, n, agents_for_task, agent_used, partial, sink);
}

std::vector<Assignment> all_admissible(int m, int n, const EdgeList& edges) {
  std::vector<Assignment> result;
  enumerate_admissible(m, n, edges,
                       [&](const Assignment& a) { result.push_back(a); });
  return result;
}

double brute_bottleneck(const SubgraphSpec& spec, const WeightMatrix& w) {
  spec.validate(w);
  const int m = static_cast<int>(spec.agents.size());
  const int n = static_cast<int>(spec.tasks.size());

  // Renumber to local indices for the enumerator.
  std::vector<int> agent_pos(w.agent_count(), -1);
  std::vector<int> task_pos(w.task_count(), -1);
  for (int i = 0; i < m; ++i) agent_pos[spec.agents[i]] = i;
  for (int j = 0; j < n; ++j) task_pos[spec.tasks[j]] = j;
  EdgeList local_edges;
  local_edges.reserve(spec.edges.size());
  for (const Edge& e : spec.edges) {
    local_edges.push_back({agent_pos[e.agent], task_pos[e.task]});
  }

  bool found = false;
  double best = 0.0;
  enumerate_admissible(m, n, local_edges, [&](const Assignment& assignment) {
    double max_weight = 0.0;
    for (const Edge& pair : assignment.pairs) {
      max_weight = std::max(max_weight,
                            w(spec.agents[pair.agent], spec.tasks[pair.task]));
    }
    if (!found || max_weight < best) best = max_weight;
    found = true;
  });
  if (!found) throw InfeasibleError("no admissible assignment exists for the subgraph");
  return best;
}

std::vector<double> assigned_weight_sequence(const Assignment& assignment,
                                             const WeightMatrix& w) {
  std::vector<double> sequence;
  sequence.reserve(assignment.pairs.size());
  for (const Edge& pair : assignment.pairs) {
    sequence.push_back(w(pair.agent, pair.task));
  }
  std::sort(sequence.begin(), sequence.end(), std::greater<>());
  return sequence;
}

BruteLexResult brute_lex_optimal(const WeightMatrix& w) {
  const SubgraphSpec full = SubgraphSpec::full_graph(w);
  BruteLexResult result;
  enumerate_admissible(w.agent_count(), w.task_count(), full.edges,
                       [&](const Assignment& assignment) {
    std::vector<double> sequence = assigned_weight_sequence(assignment, w);
    if (result.optima.empty()) {
      result.optima.push_back(assignment);
      result.sequence = std::move(sequence);
      return;
    }
    switch (lex_compare(sequence, result.sequence)) {
      case LexOrder::less:
        result.optima.assign(1, assignment);
        result.sequence = std::move(sequence);
        break;
      case LexOrder::equal:
        result.optima.push_back(assignment);
        break;
      case LexOrder::greater:
        break;
    }
  });
  if (result.optima.empty()) throw InfeasibleError("no admissible assignment exists");
  return result;
}

}  // namespace lexbap
