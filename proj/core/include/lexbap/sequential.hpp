#pragma once

#include <span>

#include "lexbap/bottleneck.hpp"

namespace lexbap {

/// One order of the sequential assignment: the selected edge, its weight
/// (the k-th order bottleneck), the robustness margin of that order, and
/// how many max-margin edges were tied when it was selected.
struct OrderRecord {
  Edge edge;
  double weight = 0.0;
  Margin margin;
  int tie_count = 1;
};

enum class TieBreak { lowest, highest };

struct SequentialResult {
  std::vector<OrderRecord> orders;      // one per task, in extraction order
  Assignment assignment;                // the selected edges of all orders
  std::vector<int> unassigned_agents;   // sorted; empty iff m == n
};

/// Sequential bottleneck assignment: for k = 1..n take a maximum-margin
/// bottleneck edge of the complete bipartite subgraph of the remaining
/// agents and tasks, record the margin, then remove that agent and task.
/// Ties among max-margin edges break toward the lowest (task, agent) pair;
/// TieBreak::highest reverses that for tie-sensitivity experiments.
SequentialResult sequential_assign(const WeightMatrix& w,
                                   TieBreak tie_break = TieBreak::lowest);

/// True iff every order's margin is strictly positive; infinite margins
/// count as positive.
bool is_robust_lexicographic(const SequentialResult& result);

/// A violated instance of the pairwise-switch inequality
/// w_a + margin_a <= max(w[i_a][j_b], w[i_b][j_a]) for orders a < b.
struct Prop2Violation {
  int order_a = 0;  // 1-based
  int order_b = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Checks the pairwise-switch inequality on all order pairs; returns the
/// violations (always empty for a correct implementation). Orders with an
/// infinite or zero margin carry no bound and are skipped.
std::vector<Prop2Violation> check_prop2(const SequentialResult& result,
                                        const WeightMatrix& w);

/// A violated instance of the unassigned-switch inequality
/// w_a + margin_a <= w[i'][j_a] for unassigned agents i'.
struct Prop3Violation {
  int order_a = 0;  // 1-based
  int agent = 0;    // the unassigned agent
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Checks the unassigned-switch inequality for every order and unassigned
/// agent; vacuously empty when m == n.
std::vector<Prop3Violation> check_prop3(const SequentialResult& result,
                                        const WeightMatrix& w);

enum class LexOrder { less, equal, greater };

/// Lexicographic comparison of two equal-length non-increasing weight
/// sequences, with tolerance-based element equality. Throws
/// std::invalid_argument on length mismatch.
LexOrder lex_compare(std::span<const double> a, std::span<const double> b);

}  // namespace lexbap
