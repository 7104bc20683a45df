#include "lexbap/safe_sets.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lexbap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double smallest_finite_margin(const SequentialResult& result) {
  double mu = kInf;
  for (const OrderRecord& order : result.orders) {
    if (!order.margin.is_infinite()) mu = std::min(mu, order.margin.value());
  }
  return mu;
}

}  // namespace

SafeSchedule build_schedule(const SequentialResult& result, const WeightMatrix& w,
                            double s, double v_ref) {
  if (result.orders.empty()) throw std::invalid_argument("empty assignment result");
  if (!std::isfinite(s) || s < 0.0) {
    throw std::invalid_argument("safety bound must be finite and non-negative");
  }
  if (!std::isfinite(v_ref) || v_ref < 0.0) {
    throw std::invalid_argument("v_ref must be finite and non-negative");
  }
  if (!is_robust_lexicographic(result)) {
    throw NotRobustError("assignment has a zero robustness margin; safe sets refused");
  }

  const double mu = smallest_finite_margin(result);
  if (s >= mu) {
    std::ostringstream msg;
    msg << "safety bound s=" << s << " must be strictly below the smallest margin mu=" << mu;
    throw MarginTooSmallError(msg.str());
  }

  SafeSchedule schedule;
  schedule.mu = mu;
  schedule.s = s;
  schedule.v_ref = v_ref;
  schedule.offset = std::isinf(mu) ? kInf : 0.5 * (mu - s);
  schedule.agent_count = w.agent_count();
  schedule.order_of_agent.assign(w.agent_count(), -1);

  double running_min = kInf;  // min over l <= k of (w_l + margin_l)
  for (std::size_t k = 0; k < result.orders.size(); ++k) {
    const OrderRecord& order = result.orders[k];
    if (!order.margin.is_infinite()) {
      running_min = std::min(running_min, order.weight + order.margin.value());
    }
    schedule.saturation.push_back(
        std::isinf(running_min) ? kInf : running_min - 0.5 * (mu + s));
    schedule.order_weight.push_back(order.weight);
    schedule.order_edge.push_back(order.edge);
    schedule.order_of_agent[order.edge.agent] = static_cast<int>(k);
  }
  return schedule;
}

SafeSchedule build_schedule(const SequentialResult& result, const WeightMatrix& w,
                            const Scenario& scenario, double v_ref) {
  scenario.validate();
  return build_schedule(result, w, scenario.safety.bound(), v_ref);
}

double radius_start(const SafeSchedule& schedule, int agent, double t) {
  if (agent < 0 || agent >= schedule.agent_count) {
    throw std::out_of_range("agent index out of range");
  }
  const int order = schedule.order_of_agent[agent];
  const double limit =
      order >= 0 ? schedule.saturation[order] : schedule.saturation.back();
  return std::min(schedule.a_of(t), limit);
}

double radius_goal(const SafeSchedule& schedule, int order, double t) {
  if (order < 0 || order >= schedule.order_count()) {
    throw std::out_of_range("order index out of range");
  }
  const double limit = schedule.saturation[order];
  const double a = std::min(schedule.a_of(t), limit);
  return limit - a + schedule.offset;
}

SafeSet safe_set_at(const SafeSchedule& schedule, const Scenario& scenario,
                    int agent, double t) {
  SafeSet set;
  set.agent = agent;
  set.center_start = scenario.initial_positions.at(agent);
  set.radius_start = radius_start(schedule, agent, t);
  const int order = schedule.order_of_agent.at(agent);
  if (order >= 0) {
    set.center_goal = scenario.targets.at(schedule.order_edge[order].task);
    set.radius_goal = radius_goal(schedule, order, t);
  }
  return set;
}

bool safe_membership(const SafeSchedule& schedule, const Scenario& scenario,
                     int agent, std::span<const double> position, double t) {
  if (static_cast<int>(position.size()) != scenario.dim) {
    throw std::invalid_argument("position dimension mismatch");
  }
  const double from_start =
      scenario.distance(scenario.initial_positions.at(agent), position);
  if (!(from_start < radius_start(schedule, agent, t))) return false;
  const int order = schedule.order_of_agent.at(agent);
  if (order < 0) return true;
  const double to_goal =
      scenario.distance(position, scenario.targets.at(schedule.order_edge[order].task));
  return to_goal < radius_goal(schedule, order, t);
}

std::vector<bool> nonemptiness_check(const SafeSchedule& schedule,
                                     const Scenario& scenario, double dt_check) {
  scenario.validate();
  if (!(dt_check > 0.0)) throw std::invalid_argument("dt_check must be positive");

  std::vector<double> grid;
  for (long step = 0; step * dt_check < scenario.horizon; ++step) {
    grid.push_back(step * dt_check);
  }
  grid.push_back(scenario.horizon);

  std::vector<bool> ok(schedule.agent_count, true);
  for (int agent = 0; agent < schedule.agent_count; ++agent) {
    const int order = schedule.order_of_agent[agent];
    if (order < 0) continue;
    const double w = schedule.order_weight[order];
    const double required = w + schedule.mu - schedule.s;
    for (double t : grid) {
      const double sum = radius_start(schedule, agent, t) + radius_goal(schedule, order, t);
      if (sum < required && !weights_equal(sum, required)) {
        ok[agent] = false;
        break;
      }
      if (!(sum > w)) {
        ok[agent] = false;
        break;
      }
    }
  }
  return ok;
}

}  // namespace lexbap
