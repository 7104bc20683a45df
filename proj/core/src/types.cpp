#include "lexbap/types.hpp"

namespace lexbap {

void SubgraphSpec::validate(const WeightMatrix& w) const {
  if (agents.empty() || tasks.empty()) {
    throw std::invalid_argument("subgraph needs at least one agent and one task");
  }
  if (agents.size() < tasks.size()) {
    throw std::invalid_argument("subgraph needs at least as many agents as tasks");
  }
  auto check_vertices = [](const std::vector<int>& ids, int bound, const char* what) {
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= bound) {
      throw std::invalid_argument(std::string(what) + " index out of range");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument(std::string(what) + " subset has duplicates");
    }
    return sorted;
  };
  const std::vector<int> sorted_agents = check_vertices(agents, w.agent_count(), "agent");
  const std::vector<int> sorted_tasks = check_vertices(tasks, w.task_count(), "task");

  EdgeList sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end()) {
    throw std::invalid_argument("edge set has duplicates");
  }
  for (const Edge& e : edges) {
    if (!std::binary_search(sorted_agents.begin(), sorted_agents.end(), e.agent) ||
        !std::binary_search(sorted_tasks.begin(), sorted_tasks.end(), e.task)) {
      throw std::invalid_argument("edge endpoint outside the subgraph vertex sets");
    }
  }
}

}  // namespace lexbap
