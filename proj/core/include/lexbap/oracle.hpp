#pragma once

#include <functional>

#include "lexbap/sequential.hpp"
#include "lexbap/types.hpp"

namespace lexbap {

// Exhaustive enumeration stays below ~40k assignments for m <= 8.
inline constexpr int kOracleAgentLimit = 8;

/// Calls `sink` once per admissible assignment of tasks 0..n-1 to agents
/// 0..m-1 over the permitted edges. Pair lists arrive sorted by
/// (agent, task). Throws SizeGuardError when m exceeds the agent limit.
void enumerate_admissible(int m, int n, const EdgeList& edges,
                          const std::function<void(const Assignment&)>& sink);

/// Enumeration collected into a vector.
std::vector<Assignment> all_admissible(int m, int n, const EdgeList& edges);

/// Exhaustive min-max reference for bottleneck_value.
double brute_bottleneck(const SubgraphSpec& spec, const WeightMatrix& w);

/// Non-increasing sequence of the weights assigned by `assignment`.
std::vector<double> assigned_weight_sequence(const Assignment& assignment,
                                             const WeightMatrix& w);

struct BruteLexResult {
  std::vector<Assignment> optima;  // every assignment achieving the sequence
  std::vector<double> sequence;    // the optimal non-increasing sequence
};

/// Exhaustive lexicographic optimum over the full assignment graph. All
/// ties are retained so uniqueness can be asserted by callers.
BruteLexResult brute_lex_optimal(const WeightMatrix& w);

}  // namespace lexbap
