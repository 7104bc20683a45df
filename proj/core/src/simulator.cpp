#include "lexbap/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace lexbap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double wrap_angle(double angle) {
  angle = std::fmod(angle, 2.0 * std::numbers::pi);
  if (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;
  if (angle > std::numbers::pi) angle -= 2.0 * std::numbers::pi;
  return angle;
}

struct ReferenceLine {
  double x0, y0;      // start
  double ux, uy;      // unit direction (zero for degenerate lines)
  double length;      // Euclidean start-to-goal distance

  void at(double t, double v_ref, double& rx, double& ry, double& speed) const {
    const double travelled = v_ref * t;
    if (travelled < length) {
      rx = x0 + ux * travelled;
      ry = y0 + uy * travelled;
      speed = v_ref;
    } else {
      rx = x0 + ux * length;
      ry = y0 + uy * length;
      speed = 0.0;
    }
  }
};

struct Inputs {
  double v = 0.0;
  double omega = 0.0;
};

Inputs control(const UnicycleState& state, const ReferenceLine& line, double t,
               const SimConfig& cfg) {
  double rx, ry, ref_speed;
  line.at(t, cfg.v_ref, rx, ry, ref_speed);
  const double ex = rx - state.x;
  const double ey = ry - state.y;
  const double dist = std::hypot(ex, ey);

  Inputs u;
  if (dist < 1e-9) {
    // On top of the reference: keep the current heading, match its speed.
    u.v = std::min(ref_speed, cfg.v_max);
    return u;
  }
  const double bearing = std::atan2(ey, ex);
  const double err = wrap_angle(bearing - state.heading);
  u.omega = std::clamp(cfg.k_heading * err, -cfg.omega_max, cfg.omega_max);
  const double desired = ref_speed + cfg.k_speed * dist;
  u.v = std::clamp(desired * std::max(0.0, std::cos(err)), 0.0, cfg.v_max);
  return u;
}

struct Derivative {
  double dx, dy, dheading;
};

Derivative dynamics(const UnicycleState& state, const ReferenceLine& line, double t,
                    const SimConfig& cfg, double disturbance) {
  const Inputs u = control(state, line, t, cfg);
  return {u.v * std::cos(state.heading), u.v * std::sin(state.heading),
          u.omega + disturbance};
}

// One RK4 step of the closed-loop dynamics; the steering disturbance is
// held constant over the step.
UnicycleState rk4_step(const UnicycleState& state, const ReferenceLine& line,
                       double t, double dt, const SimConfig& cfg, double disturbance) {
  const auto advance = [&](const Derivative& d, double h) {
    return UnicycleState{state.x + d.dx * h, state.y + d.dy * h,
                         state.heading + d.dheading * h};
  };
  const Derivative k1 = dynamics(state, line, t, cfg, disturbance);
  const Derivative k2 = dynamics(advance(k1, dt / 2), line, t + dt / 2, cfg, disturbance);
  const Derivative k3 = dynamics(advance(k2, dt / 2), line, t + dt / 2, cfg, disturbance);
  const Derivative k4 = dynamics(advance(k3, dt), line, t + dt, cfg, disturbance);
  UnicycleState next;
  next.x = state.x + dt / 6.0 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx);
  next.y = state.y + dt / 6.0 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy);
  next.heading = wrap_angle(state.heading + dt / 6.0 * (k1.dheading + 2 * k2.dheading +
                                                        2 * k3.dheading + k4.dheading));
  return next;
}

}  // namespace

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  // v_ref = 0 is legal: the reference never moves and agents hold position.
  if (!(v_ref >= 0.0) || !std::isfinite(v_ref)) {
    throw std::invalid_argument("v_ref must be a non-negative real");
  }
  if (v_max < v_ref || !(v_max > 0.0)) {
    throw std::invalid_argument("v_max must be positive and at least v_ref");
  }
  if (!(omega_max > 0.0)) throw std::invalid_argument("omega_max must be positive");
  if (disturbance_amplitude < 0.0 || heading_offset < 0.0) {
    throw std::invalid_argument("noise magnitudes must be non-negative");
  }
  if (horizon < 0.0) throw std::invalid_argument("horizon must be non-negative");
}

std::vector<Trajectory> simulate(const Scenario& scenario,
                                 const SequentialResult& result,
                                 const SimConfig& config) {
  scenario.validate();
  config.validate();
  if (scenario.dim != 2) {
    throw std::invalid_argument("the unicycle simulator is 2-D only");
  }

  const double horizon = config.horizon > 0.0 ? config.horizon : scenario.horizon;
  const int steps = static_cast<int>(std::llround(horizon / config.dt));

  std::vector<int> task_of_agent(scenario.agent_count(), -1);
  for (const OrderRecord& order : result.orders) {
    task_of_agent[order.edge.agent] = order.edge.task;
  }

  std::vector<Trajectory> trajectories(scenario.agent_count());
  for (int agent = 0; agent < scenario.agent_count(); ++agent) {
    Trajectory& trajectory = trajectories[agent];
    trajectory.agent = agent;
    trajectory.times.reserve(steps + 1);
    trajectory.positions.reserve(steps + 1);

    const Point& start = scenario.initial_positions[agent];
    const int task = task_of_agent[agent];
    if (task < 0) {
      // Unassigned agents hold position.
      for (int k = 0; k <= steps; ++k) {
        trajectory.times.push_back(k * config.dt);
        trajectory.positions.push_back(start);
      }
      continue;
    }

    const Point& goal = scenario.targets[task];
    ReferenceLine line{start[0], start[1], 0.0, 0.0,
                       std::hypot(goal[0] - start[0], goal[1] - start[1])};
    if (line.length > 1e-12) {
      line.ux = (goal[0] - start[0]) / line.length;
      line.uy = (goal[1] - start[1]) / line.length;
    }

    // Per-agent stream keeps runs reproducible regardless of agent order.
    std::mt19937_64 rng(config.rng_seed + static_cast<std::uint64_t>(agent));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    UnicycleState state{start[0], start[1], 0.0};
    const double bearing = line.length > 1e-12 ? std::atan2(line.uy, line.ux) : 0.0;
    state.heading = wrap_angle(bearing + config.heading_offset * unit(rng));

    trajectory.times.push_back(0.0);
    trajectory.positions.push_back(start);
    for (int k = 0; k < steps; ++k) {
      const double t = k * config.dt;
      const double disturbance = config.disturbance_amplitude * unit(rng);
      state = rk4_step(state, line, t, config.dt, config, disturbance);
      trajectory.times.push_back((k + 1) * config.dt);
      trajectory.positions.push_back({state.x, state.y});
    }
  }
  return trajectories;
}

VerificationReport verify_run(const std::vector<Trajectory>& trajectories,
                              const SafeSchedule& schedule, const Scenario& scenario,
                              std::optional<double> speed_limit) {
  scenario.validate();
  const int m = scenario.agent_count();
  if (static_cast<int>(trajectories.size()) != m) {
    throw std::invalid_argument("need exactly one trajectory per agent");
  }

  std::vector<const Trajectory*> by_agent(m, nullptr);
  for (const Trajectory& trajectory : trajectories) {
    if (trajectory.agent < 0 || trajectory.agent >= m || by_agent[trajectory.agent]) {
      throw std::invalid_argument("trajectories must cover every agent exactly once");
    }
    by_agent[trajectory.agent] = &trajectory;
  }
  const std::vector<double>& grid = by_agent[0]->times;
  if (grid.empty()) throw std::invalid_argument("empty trajectories");
  for (const Trajectory* trajectory : by_agent) {
    if (trajectory->times.size() != grid.size() ||
        trajectory->positions.size() != grid.size()) {
      throw std::invalid_argument("trajectory time grids differ");
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (std::abs(trajectory->times[k] - grid[k]) > 1e-9) {
        throw std::invalid_argument("trajectory time grids differ");
      }
    }
  }

  VerificationReport report;
  report.min_pair_distance = kInf;
  report.min_pair_slack = kInf;
  report.min_membership_slack = kInf;
  report.sample_count = static_cast<int>(grid.size());

  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    for (int agent = 0; agent < m; ++agent) {
      const Point& p = by_agent[agent]->positions[k];
      const double start_slack =
          radius_start(schedule, agent, t) -
          scenario.distance(scenario.initial_positions[agent], p);
      report.min_membership_slack = std::min(report.min_membership_slack, start_slack);
      if (!(start_slack > 0.0)) {
        report.membership_violations.push_back({agent, t, false, start_slack});
      }
      const int order = schedule.order_of_agent[agent];
      if (order >= 0) {
        const double goal_slack =
            radius_goal(schedule, order, t) -
            scenario.distance(p, scenario.targets[schedule.order_edge[order].task]);
        report.min_membership_slack = std::min(report.min_membership_slack, goal_slack);
        if (!(goal_slack > 0.0)) {
          report.membership_violations.push_back({agent, t, true, goal_slack});
        }
      }
    }
    // Pairwise distances; the guarantee covers (assigned, any other) pairs.
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (!schedule.assigned(a) && !schedule.assigned(b)) continue;
        const double distance =
            scenario.distance(by_agent[a]->positions[k], by_agent[b]->positions[k]);
        const double required = scenario.safety.between(a, b);
        report.min_pair_distance = std::min(report.min_pair_distance, distance);
        report.min_pair_slack = std::min(report.min_pair_slack, distance - required);
        if (!(distance > required)) {
          report.collisions.push_back({a, b, t, distance, required});
        }
      }
    }
  }

  report.all_in_sets = report.membership_violations.empty();
  report.no_collisions = report.collisions.empty();
  report.implication_holds = !report.all_in_sets || report.no_collisions;

  if (speed_limit && grid.size() > 1) {
    double max_gap = 0.0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
      max_gap = std::max(max_gap, grid[k] - grid[k - 1]);
    }
    // Between samples a position moves at most v*dt while radii change at
    // most v_ref*dt; pairs close at most 2*v*dt.
    const double membership_erosion = (*speed_limit + schedule.v_ref) * max_gap;
    const double pair_erosion = 2.0 * *speed_limit * max_gap;
    report.continuous_certified = report.all_in_sets && report.no_collisions &&
                                  report.min_membership_slack > membership_erosion &&
                                  report.min_pair_slack > pair_erosion;
  }
  return report;
}

}  // namespace lexbap
