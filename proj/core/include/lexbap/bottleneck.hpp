#pragma once

#include "lexbap/types.hpp"

namespace lexbap {

/// True iff `assignment` is an admissible allocation for `spec`: every task
/// in spec.tasks is covered exactly once by an agent in spec.agents through
/// a permitted edge, and no such agent covers two tasks.
bool admissible(const Assignment& assignment, const SubgraphSpec& spec);

/// Largest weight among assigned pairs that lie inside spec.edges; 0 when
/// none does. Throws std::invalid_argument for inadmissible assignments.
double assignment_max_weight(const Assignment& assignment, const SubgraphSpec& spec,
                             const WeightMatrix& w);

/// Bottleneck weight of the subgraph: the minimum over admissible
/// assignments of their largest assigned weight. Binary search over the
/// sorted distinct edge weights with a task-saturating matching test at
/// each threshold. Throws InfeasibleError when no admissible assignment
/// exists.
double bottleneck_value(const SubgraphSpec& spec, const WeightMatrix& w);

/// One bottleneck minimising assignment, deterministic for a fixed input
/// ordering (ties broken toward the lowest agent index).
Assignment min_bottleneck_assignment(const SubgraphSpec& spec, const WeightMatrix& w);

/// All edges of spec.edges whose weight equals the bottleneck value, sorted
/// by (agent, task).
EdgeList bottleneck_edges(const SubgraphSpec& spec, const WeightMatrix& w);

struct MaxMarginResult {
  EdgeList edges;  // sorted (agent, task)
  Margin margin;
};

/// Maximum-margin bottleneck edges and the robustness margin of a complete
/// bipartite subgraph: among the bottleneck edges, those whose removal
/// raises the bottleneck the most; the margin is that raise. A 1x1 subgraph
/// yields its single edge with an infinite margin. Requires
/// spec.edges == spec.agents x spec.tasks.
MaxMarginResult max_margin_edges_and_margin(const SubgraphSpec& spec,
                                            const WeightMatrix& w);

/// Full summary (value, bottleneck edges, max-margin edges, margin) for a
/// complete bipartite subgraph.
BottleneckSummary bottleneck_summary(const SubgraphSpec& spec, const WeightMatrix& w);

struct BottleneckSolve {
  BottleneckSummary summary;
  Assignment representative;  // one bottleneck minimising assignment
};

/// Summary plus a representative optimising assignment from the same run.
BottleneckSolve bottleneck_solve(const SubgraphSpec& spec, const WeightMatrix& w);

}  // namespace lexbap
