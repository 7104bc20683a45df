#pragma once

#include "lexbap/metric.hpp"
#include "lexbap/types.hpp"

namespace lexbap {

/// Minimum separation requirements: one global value or a full symmetric
/// per-pair matrix over agents.
class SafetySpec {
 public:
  static SafetySpec uniform(double s);
  static SafetySpec pairwise(const std::vector<std::vector<double>>& values);

  bool is_uniform() const { return uniform_; }
  int size() const { return size_; }

  /// s_{i,i'} for a specific pair.
  double between(int i, int j) const;

  /// The global upper bound s >= s_{i,i'} used by the schedule.
  double bound() const { return bound_; }

 private:
  SafetySpec() = default;
  bool uniform_ = true;
  int size_ = 0;
  double bound_ = 0.0;
  std::vector<double> values_;
};

/// Static problem data: initial positions, target destinations, safety
/// distances, the metric, and the horizon of interest.
struct Scenario {
  int dim = 2;
  std::vector<Point> initial_positions;
  std::vector<Point> targets;
  SafetySpec safety = SafetySpec::uniform(0.0);
  Metric metric = Metric::euclidean();
  double horizon = 0.0;

  int agent_count() const { return static_cast<int>(initial_positions.size()); }
  int task_count() const { return static_cast<int>(targets.size()); }

  double distance(std::span<const double> p, std::span<const double> q) const {
    return metric.distance(p, q);
  }

  /// Structural invariants: m > 1, 1 <= n <= m, consistent dimensions,
  /// positive horizon, safety matrix sized to the agents.
  void validate() const;
};

/// Assignment weights from geometry: w[i][j] = d(p_i(0), g_j).
WeightMatrix build_weights(const Scenario& scenario);

}  // namespace lexbap
