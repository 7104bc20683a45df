#pragma once

#include <string>
#include <vector>

#include "lexbap/simulator.hpp"

namespace lexbap::svg {

/// Renders one 2-D frame at time t: start and goal balls of every safe set,
/// agent positions with their safety circles, and the trajectory trails up
/// to t. Returns the SVG document text.
std::string render_frame(const Scenario& scenario, const SafeSchedule& schedule,
                         const std::vector<Trajectory>& trajectories, double t);

}  // namespace lexbap::svg
