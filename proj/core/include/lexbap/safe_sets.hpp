#pragma once

#include <optional>

#include "lexbap/scenario.hpp"
#include "lexbap/sequential.hpp"

namespace lexbap {

/// The safety bound is not strictly below the smallest robustness margin,
/// so no collision-avoidance guarantee can be constructed.
class MarginTooSmallError : public std::runtime_error {
 public:
  explicit MarginTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

/// The assignment has a zero margin at some order; safe sets are refused.
class NotRobustError : public std::runtime_error {
 public:
  explicit NotRobustError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters of the time-varying safe position sets: the global margin mu,
/// the safety bound s, per-order saturation limits A_k, and the shared
/// radius schedule a(t) = v_ref * t + (mu - s) / 2.
struct SafeSchedule {
  double mu = 0.0;      // min over finite order margins (+inf if none)
  double s = 0.0;       // global safety bound, s < mu
  double v_ref = 0.0;   // growth rate of a(t)
  double offset = 0.0;  // (mu - s) / 2 = a(0)
  std::vector<double> saturation;    // A_k per order, non-increasing
  std::vector<double> order_weight;  // w at the k-th order edge
  std::vector<Edge> order_edge;      // (i*_k, j*_k) per order
  std::vector<int> order_of_agent;   // agent -> 0-based order, -1 if unassigned
  int agent_count = 0;

  double a_of(double t) const { return v_ref * t + offset; }
  int order_count() const { return static_cast<int>(saturation.size()); }
  bool assigned(int agent) const { return order_of_agent[agent] >= 0; }
};

/// Builds the schedule from a robust sequential assignment. Throws
/// NotRobustError when some margin is zero and MarginTooSmallError when
/// s >= mu. `s` is the global safety bound.
SafeSchedule build_schedule(const SequentialResult& result, const WeightMatrix& w,
                            double s, double v_ref);

/// Overload taking the bound from the scenario's safety distances.
SafeSchedule build_schedule(const SequentialResult& result, const WeightMatrix& w,
                            const Scenario& scenario, double v_ref);

/// Start-ball radius of an agent at time t: min(a(t), A_k) for the agent of
/// order k; unassigned agents use the last order's limit.
double radius_start(const SafeSchedule& schedule, int agent, double t);

/// Goal-ball radius of the given 0-based order at time t:
/// A_k - a_{i*_k}(t) + (mu - s) / 2.
double radius_goal(const SafeSchedule& schedule, int order, double t);

/// Snapshot of one agent's safe set at time t. The goal ball is present
/// only for assigned agents.
struct SafeSet {
  int agent = -1;
  Point center_start;
  double radius_start = 0.0;
  std::optional<Point> center_goal;
  std::optional<double> radius_goal;
};

SafeSet safe_set_at(const SafeSchedule& schedule, const Scenario& scenario,
                    int agent, double t);

/// Strict membership test: d(p_i(0), p) < a_i(t), and for assigned agents
/// additionally d(p, g) < b(t). Boundary points are unsafe.
bool safe_membership(const SafeSchedule& schedule, const Scenario& scenario,
                     int agent, std::span<const double> position, double t);

/// Checks a(t) + b(t) >= w + mu - s (hence > w) for every assigned agent on
/// a dt_check grid over [0, horizon], endpoints included. Unassigned agents
/// are vacuously true.
std::vector<bool> nonemptiness_check(const SafeSchedule& schedule,
                                     const Scenario& scenario,
                                     double dt_check = 0.05);

}  // namespace lexbap
