#pragma once

#include <cstdint>
#include <optional>

#include "lexbap/safe_sets.hpp"

namespace lexbap {

/// Planar unicycle pose. Heading stays normalized to (-pi, pi].
struct UnicycleState {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

/// Controller and integration parameters. Defaults are tuned to track the
/// moving reference tightly under mild disturbance.
struct SimConfig {
  double dt = 0.01;                     // integration and sampling step (s)
  double v_ref = 10.0;                  // reference point speed (m/s)
  double v_max = 13.0;                  // forward speed saturation (m/s)
  double omega_max = 4.0;               // turn rate saturation (rad/s)
  double k_heading = 4.0;               // proportional heading gain
  double k_speed = 1.5;                 // proportional catch-up gain
  double disturbance_amplitude = 0.05;  // steering noise bound (rad/s)
  double heading_offset = 0.6;          // max initial heading error (rad)
  std::uint64_t rng_seed = 1;
  double horizon = 0.0;                 // 0: use the scenario horizon

  void validate() const;
};

/// Sampled motion of one agent on the shared time grid (multiples of dt
/// from 0 to the horizon).
struct Trajectory {
  int agent = -1;
  std::vector<double> times;
  std::vector<Point> positions;
};

/// Integrates every agent: assigned agents track a reference point that
/// moves at v_ref along the straight line to their target, under
/// proportional heading/speed control with input saturation and a seeded
/// per-step steering disturbance; unassigned agents hold position.
/// Deterministic for a fixed (scenario, result, config) triple; agent i
/// draws from a stream seeded with rng_seed + i.
std::vector<Trajectory> simulate(const Scenario& scenario,
                                 const SequentialResult& result,
                                 const SimConfig& config);

struct VerificationReport {
  bool all_in_sets = false;
  bool no_collisions = false;
  bool implication_holds = false;    // !all_in_sets || no_collisions
  bool continuous_certified = false; // slack covers inter-sample excursions
  double min_pair_distance = 0.0;    // over samples and (assigned, other) pairs
  double min_pair_slack = 0.0;       // min of (distance - s_pair)
  double min_membership_slack = 0.0; // min ball-containment slack
  int sample_count = 0;

  struct MembershipViolation {
    int agent = -1;
    double t = 0.0;
    bool goal_ball = false;  // false: start ball
    double slack = 0.0;      // negative or zero
  };
  struct CollisionViolation {
    int agent_a = -1;
    int agent_b = -1;
    double t = 0.0;
    double distance = 0.0;
    double required = 0.0;
  };
  std::vector<MembershipViolation> membership_violations;
  std::vector<CollisionViolation> collisions;
};

/// Checks every sample: per-agent safe-set membership and, for every
/// (assigned, other) pair, distance strictly above the pair's safety
/// distance. Trajectories must share one time grid and cover every agent.
/// When a speed limit is supplied the report is flagged
/// continuous_certified if the observed slacks dominate the possible
/// excursion between consecutive samples.
VerificationReport verify_run(const std::vector<Trajectory>& trajectories,
                              const SafeSchedule& schedule, const Scenario& scenario,
                              std::optional<double> speed_limit = std::nullopt);

}  // namespace lexbap
