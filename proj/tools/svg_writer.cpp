#include "svg_writer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lexbap::svg {
namespace {

struct Mapper {
  double min_x, max_y, scale, pad;
  double x(double wx) const { return (wx - min_x) * scale + pad; }
  double y(double wy) const { return (max_y - wy) * scale + pad; }
  double r(double radius) const { return radius * scale; }
};

Point position_at(const Trajectory& trajectory, double t) {
  const auto& times = trajectory.times;
  if (t <= times.front()) return trajectory.positions.front();
  if (t >= times.back()) return trajectory.positions.back();
  const auto upper = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t hi = upper - times.begin();
  const std::size_t lo = hi - 1;
  const double f = (t - times[lo]) / (times[hi] - times[lo]);
  const Point& a = trajectory.positions[lo];
  const Point& b = trajectory.positions[hi];
  return {a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1])};
}

void circle(std::ostringstream& out, const Mapper& map, const Point& center,
            double radius, const char* stroke, const char* fill,
            double fill_opacity) {
  if (!std::isfinite(radius)) return;
  out << "  <circle cx=\"" << map.x(center[0]) << "\" cy=\"" << map.y(center[1])
      << "\" r=\"" << map.r(radius) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"1\" fill=\"" << fill << "\" fill-opacity=\""
      << fill_opacity << "\"/>\n";
}

void dot(std::ostringstream& out, const Mapper& map, const Point& center,
         const char* fill) {
  out << "  <circle cx=\"" << map.x(center[0]) << "\" cy=\"" << map.y(center[1])
      << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string render_frame(const Scenario& scenario, const SafeSchedule& schedule,
                         const std::vector<Trajectory>& trajectories, double t) {
  const int m = scenario.agent_count();

  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  double reach = scenario.safety.bound();
  const auto grow = [&](const Point& p) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  };
  for (const Point& p : scenario.initial_positions) grow(p);
  for (const Point& g : scenario.targets) grow(g);
  for (int agent = 0; agent < m; ++agent) {
    const double a = radius_start(schedule, agent, t);
    if (std::isfinite(a)) reach = std::max(reach, a);
  }
  min_x -= reach;
  max_x += reach;
  min_y -= reach;
  max_y += reach;

  const double pad = 10.0;
  const double width = 800.0;
  const double scale = (width - 2 * pad) / std::max(max_x - min_x, 1e-9);
  const double height = (max_y - min_y) * scale + 2 * pad;
  const Mapper map{min_x, max_y, scale, pad};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Safe sets: start balls in blue, goal balls in green.
  for (int agent = 0; agent < m; ++agent) {
    circle(out, map, scenario.initial_positions[agent],
           radius_start(schedule, agent, t), "#4878cf", "#4878cf", 0.12);
    const int order = schedule.order_of_agent[agent];
    if (order >= 0) {
      circle(out, map, scenario.targets[schedule.order_edge[order].task],
             radius_goal(schedule, order, t), "#2e7d32", "#6acc65", 0.12);
    }
  }

  // Trails up to t.
  for (const Trajectory& trajectory : trajectories) {
    out << "  <polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" "
           "stroke-dasharray=\"4 3\" points=\"";
    for (std::size_t k = 0; k < trajectory.times.size() && trajectory.times[k] <= t; ++k) {
      out << map.x(trajectory.positions[k][0]) << ',' << map.y(trajectory.positions[k][1])
          << ' ';
    }
    out << "\"/>\n";
  }

  // Markers: initial positions, targets, current positions + safety circles.
  for (const Point& g : scenario.targets) dot(out, map, g, "#1b5e20");
  for (const Point& p : scenario.initial_positions) dot(out, map, p, "#1a3e7a");
  for (const Trajectory& trajectory : trajectories) {
    const Point p = position_at(trajectory, t);
    circle(out, map, p, scenario.safety.bound() / 2.0, "#d65f5f", "none", 0.0);
    dot(out, map, p, "#000000");
  }

  out << "  <text x=\"" << pad << "\" y=\"" << pad + 8
      << "\" font-family=\"monospace\" font-size=\"12\">t = " << t << " s</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace lexbap::svg
