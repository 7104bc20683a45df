#include "lexbap/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <set>

#include "json.hpp"

namespace lexbap {
namespace {

using Json = nlohmann::ordered_json;

void expect_keys(const Json& object, const std::set<std::string>& allowed,
                 const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ParseError("unknown key \"" + key + "\" in " + where);
    }
  }
}

double as_number(const Json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + " must be a number");
  return value.get<double>();
}

int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  return value.get<int>();
}

Point as_point(const Json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) {
    throw ParseError(where + " must be a non-empty array of numbers");
  }
  Point p;
  for (const auto& coordinate : value) p.push_back(as_number(coordinate, where));
  return p;
}

std::vector<std::vector<double>> as_matrix(const Json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) {
    throw ParseError(where + " must be a non-empty array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : value) rows.push_back(as_point(row, where + " row"));
  return rows;
}

Json point_json(const Point& p) {
  Json array = Json::array();
  for (double c : p) array.push_back(round_to_9_digits(c));
  return array;
}

Metric parse_metric(const Json& value) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "euclidean") return Metric::euclidean();
    if (name == "manhattan") return Metric::manhattan();
    if (name == "chebyshev") return Metric::chebyshev();
    throw ParseError("unknown metric \"" + name + "\"");
  }
  expect_keys(value, {"table"}, "metric");
  if (!value.contains("table")) throw ParseError("metric object needs a table");
  try {
    return Metric::custom_table(as_matrix(value.at("table"), "metric table"));
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what());
  }
}

Json metric_json(const Metric& metric) {
  switch (metric.kind()) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::manhattan: return "manhattan";
    case MetricKind::chebyshev: return "chebyshev";
    case MetricKind::custom_table: {
      Json rows = Json::array();
      for (int a = 0; a < metric.table_size(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < metric.table_size(); ++b) {
          row.push_back(round_to_9_digits(metric.table_at(a, b)));
        }
        rows.push_back(row);
      }
      return Json{{"table", rows}};
    }
  }
  throw std::logic_error("unreachable metric kind");
}

SimConfig parse_sim(const Json& value, double v_ref) {
  SimConfig sim;
  sim.v_ref = v_ref;
  if (value.is_null()) return sim;
  expect_keys(value,
              {"dt", "gains", "saturations", "disturbance", "heading_offset", "seed"},
              "sim");
  if (value.contains("dt")) sim.dt = as_number(value.at("dt"), "sim.dt");
  if (value.contains("gains")) {
    const Json& gains = value.at("gains");
    expect_keys(gains, {"heading", "speed"}, "sim.gains");
    if (gains.contains("heading")) {
      sim.k_heading = as_number(gains.at("heading"), "sim.gains.heading");
    }
    if (gains.contains("speed")) {
      sim.k_speed = as_number(gains.at("speed"), "sim.gains.speed");
    }
  }
  if (value.contains("saturations")) {
    const Json& sat = value.at("saturations");
    expect_keys(sat, {"v", "omega"}, "sim.saturations");
    if (sat.contains("v")) sim.v_max = as_number(sat.at("v"), "sim.saturations.v");
    if (sat.contains("omega")) {
      sim.omega_max = as_number(sat.at("omega"), "sim.saturations.omega");
    }
  }
  if (value.contains("disturbance")) {
    sim.disturbance_amplitude = as_number(value.at("disturbance"), "sim.disturbance");
  }
  if (value.contains("heading_offset")) {
    sim.heading_offset = as_number(value.at("heading_offset"), "sim.heading_offset");
  }
  if (value.contains("seed")) {
    const Json& seed = value.at("seed");
    if (!seed.is_number_integer()) throw ParseError("sim.seed must be an integer");
    sim.rng_seed = seed.get<std::uint64_t>();
  }
  return sim;
}

Json sim_json(const SimConfig& sim) {
  Json out;
  out["dt"] = round_to_9_digits(sim.dt);
  out["gains"] = {{"heading", round_to_9_digits(sim.k_heading)},
                  {"speed", round_to_9_digits(sim.k_speed)}};
  out["saturations"] = {{"v", round_to_9_digits(sim.v_max)},
                        {"omega", round_to_9_digits(sim.omega_max)}};
  out["disturbance"] = round_to_9_digits(sim.disturbance_amplitude);
  out["heading_offset"] = round_to_9_digits(sim.heading_offset);
  out["seed"] = sim.rng_seed;
  return out;
}

ScenarioInput parse_scenario_json(const Json& doc) {
  expect_keys(doc,
              {"dim", "metric", "agents", "targets", "weights", "safety", "horizon",
               "schedule", "sim"},
              "scenario document");

  ScenarioInput input;
  if (doc.contains("schedule")) {
    expect_keys(doc.at("schedule"), {"v_ref"}, "schedule");
    if (doc.at("schedule").contains("v_ref")) {
      input.v_ref = as_number(doc.at("schedule").at("v_ref"), "schedule.v_ref");
    }
  }
  input.sim = parse_sim(doc.contains("sim") ? doc.at("sim") : Json(), input.v_ref);

  const bool has_weights = doc.contains("weights");
  const bool has_geometry = doc.contains("agents") || doc.contains("targets");
  if (has_weights && has_geometry) {
    throw ParseError("\"weights\" and agent/target geometry are mutually exclusive");
  }
  if (!has_weights && !has_geometry) {
    throw ParseError("scenario needs either \"weights\" or agents and targets");
  }

  if (has_weights) {
    for (const char* key : {"dim", "metric"}) {
      if (doc.contains(key)) {
        throw ParseError(std::string("\"") + key + "\" is not valid with raw weights");
      }
    }
    try {
      input.weights = WeightMatrix::from_rows(as_matrix(doc.at("weights"), "weights"));
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what());
    }
    if (doc.contains("safety")) {
      input.raw_safety = as_number(doc.at("safety"), "safety");
    }
    return input;
  }

  if (!doc.contains("agents") || !doc.contains("targets")) {
    throw ParseError("geometric scenarios need both agents and targets");
  }
  Scenario scenario;
  scenario.dim = doc.contains("dim") ? as_int(doc.at("dim"), "dim") : 2;
  if (doc.contains("metric")) scenario.metric = parse_metric(doc.at("metric"));

  const auto parse_nodes = [&](const Json& list, const char* what, const char* prefix,
                               std::vector<Point>& positions,
                               std::vector<std::string>& ids) {
    if (!list.is_array() || list.empty()) {
      throw ParseError(std::string(what) + " must be a non-empty array");
    }
    for (const auto& node : list) {
      expect_keys(node, {"id", "position"}, what);
      if (!node.contains("position")) {
        throw ParseError(std::string(what) + " entry needs a position");
      }
      positions.push_back(as_point(node.at("position"), std::string(what) + " position"));
      if (node.contains("id")) {
        if (!node.at("id").is_string()) throw ParseError("node ids must be strings");
        ids.push_back(node.at("id").get<std::string>());
      } else {
        ids.push_back(prefix + std::to_string(positions.size()));
      }
    }
  };
  parse_nodes(doc.at("agents"), "agents", "a", scenario.initial_positions,
              input.agent_ids);
  parse_nodes(doc.at("targets"), "targets", "g", scenario.targets, input.target_ids);

  if (doc.contains("safety")) {
    const Json& safety = doc.at("safety");
    try {
      if (safety.is_number()) {
        scenario.safety = SafetySpec::uniform(as_number(safety, "safety"));
      } else {
        expect_keys(safety, {"matrix"}, "safety");
        if (!safety.contains("matrix")) throw ParseError("safety object needs a matrix");
        scenario.safety =
            SafetySpec::pairwise(as_matrix(safety.at("matrix"), "safety matrix"));
      }
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what());
    }
  }
  if (!doc.contains("horizon")) throw ParseError("geometric scenarios need a horizon");
  scenario.horizon = as_number(doc.at("horizon"), "horizon");

  try {
    scenario.validate();
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what());
  }
  input.scenario = std::move(scenario);
  return input;
}

Json scenario_json(const ScenarioInput& input) {
  Json doc;
  if (input.weights) {
    Json rows = Json::array();
    for (int i = 0; i < input.weights->agent_count(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < input.weights->task_count(); ++j) {
        row.push_back(round_to_9_digits((*input.weights)(i, j)));
      }
      rows.push_back(row);
    }
    doc["weights"] = rows;
    if (input.raw_safety) doc["safety"] = round_to_9_digits(*input.raw_safety);
  } else {
    const Scenario& scenario = *input.scenario;
    doc["dim"] = scenario.dim;
    doc["metric"] = metric_json(scenario.metric);
    Json agents = Json::array();
    for (int i = 0; i < scenario.agent_count(); ++i) {
      agents.push_back({{"id", input.agent_ids[i]},
                        {"position", point_json(scenario.initial_positions[i])}});
    }
    doc["agents"] = agents;
    Json targets = Json::array();
    for (int j = 0; j < scenario.task_count(); ++j) {
      targets.push_back(
          {{"id", input.target_ids[j]}, {"position", point_json(scenario.targets[j])}});
    }
    doc["targets"] = targets;
    if (scenario.safety.is_uniform()) {
      doc["safety"] = round_to_9_digits(scenario.safety.bound());
    } else {
      Json rows = Json::array();
      for (int i = 0; i < scenario.safety.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < scenario.safety.size(); ++j) {
          row.push_back(round_to_9_digits(scenario.safety.between(i, j)));
        }
        rows.push_back(row);
      }
      doc["safety"] = Json{{"matrix", rows}};
    }
    doc["horizon"] = round_to_9_digits(scenario.horizon);
  }
  doc["schedule"] = Json{{"v_ref", round_to_9_digits(input.v_ref)}};
  doc["sim"] = sim_json(input.sim);
  return doc;
}

Json margin_json(const Margin& margin) {
  if (margin.is_infinite()) return "inf";
  return round_to_9_digits(margin.value());
}

Margin parse_margin(const Json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return Margin::infinity();
    throw ParseError("margin must be a number or \"inf\"");
  }
  return Margin::finite(as_number(value, "margin"));
}

Json assignment_json(const SequentialResult& result, bool robust) {
  Json orders = Json::array();
  int k = 0;
  for (const OrderRecord& order : result.orders) {
    orders.push_back({{"order", ++k},
                      {"agent", order.edge.agent},
                      {"task", order.edge.task},
                      {"weight", round_to_9_digits(order.weight)},
                      {"margin", margin_json(order.margin)},
                      {"tie_count", order.tie_count}});
  }
  Json pairs = Json::array();
  for (const Edge& pair : result.assignment.pairs) {
    pairs.push_back(Json::array({pair.agent, pair.task}));
  }
  return Json{{"orders", orders},
              {"pairs", pairs},
              {"unassigned_agents", result.unassigned_agents},
              {"robust", robust}};
}

SequentialResult parse_assignment(const Json& value, bool& robust) {
  expect_keys(value, {"orders", "pairs", "unassigned_agents", "robust"}, "assignment");
  SequentialResult result;
  if (!value.contains("orders") || !value.at("orders").is_array()) {
    throw ParseError("assignment needs an orders array");
  }
  int expected = 0;
  for (const auto& entry : value.at("orders")) {
    expect_keys(entry, {"order", "agent", "task", "weight", "margin", "tie_count"},
                "assignment order");
    if (as_int(entry.at("order"), "order") != ++expected) {
      throw ParseError("order entries must be consecutive from 1");
    }
    OrderRecord record;
    record.edge = {as_int(entry.at("agent"), "agent"), as_int(entry.at("task"), "task")};
    record.weight = as_number(entry.at("weight"), "weight");
    record.margin = parse_margin(entry.at("margin"));
    record.tie_count = as_int(entry.at("tie_count"), "tie_count");
    result.orders.push_back(record);
    result.assignment.pairs.push_back(record.edge);
  }
  result.assignment.sort();
  if (value.contains("unassigned_agents")) {
    for (const auto& agent : value.at("unassigned_agents")) {
      result.unassigned_agents.push_back(as_int(agent, "unassigned agent"));
    }
  }
  robust = value.contains("robust") && value.at("robust").is_boolean()
               ? value.at("robust").get<bool>()
               : is_robust_lexicographic(result);
  return result;
}

// JSON has no infinity literal; radii and margins that are infinite are
// written as the string "inf".
Json extended_number(double value) {
  if (std::isinf(value) && value > 0.0) return "inf";
  return round_to_9_digits(value);
}

double parse_extended_number(const Json& value, const std::string& where) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    throw ParseError(where + " must be a number or \"inf\"");
  }
  return as_number(value, where);
}

Json schedule_json(const SafeSchedule& schedule) {
  Json saturation = Json::array();
  for (double a : schedule.saturation) saturation.push_back(extended_number(a));
  return Json{{"mu", extended_number(schedule.mu)},
              {"s", round_to_9_digits(schedule.s)},
              {"v_ref", round_to_9_digits(schedule.v_ref)},
              {"offset", extended_number(schedule.offset)},
              {"saturation", saturation}};
}

SafeSchedule parse_schedule(const Json& value, const SequentialResult& result,
                            int agent_count) {
  expect_keys(value, {"mu", "s", "v_ref", "offset", "saturation"}, "schedule");
  SafeSchedule schedule;
  schedule.mu = parse_extended_number(value.at("mu"), "schedule.mu");
  schedule.s = as_number(value.at("s"), "schedule.s");
  schedule.v_ref = as_number(value.at("v_ref"), "schedule.v_ref");
  schedule.offset = parse_extended_number(value.at("offset"), "schedule.offset");
  for (const auto& a : value.at("saturation")) {
    schedule.saturation.push_back(parse_extended_number(a, "schedule.saturation"));
  }
  if (schedule.saturation.size() != result.orders.size()) {
    throw ParseError("schedule saturation length must match the order count");
  }
  schedule.agent_count = agent_count;
  schedule.order_of_agent.assign(agent_count, -1);
  for (std::size_t k = 0; k < result.orders.size(); ++k) {
    schedule.order_weight.push_back(result.orders[k].weight);
    schedule.order_edge.push_back(result.orders[k].edge);
    schedule.order_of_agent[result.orders[k].edge.agent] = static_cast<int>(k);
  }
  return schedule;
}

Json trajectories_json(const std::vector<Trajectory>& trajectories) {
  Json list = Json::array();
  for (const Trajectory& trajectory : trajectories) {
    Json times = Json::array();
    for (double t : trajectory.times) times.push_back(round_to_9_digits(t));
    Json positions = Json::array();
    for (const Point& p : trajectory.positions) positions.push_back(point_json(p));
    list.push_back(
        {{"agent", trajectory.agent}, {"times", times}, {"positions", positions}});
  }
  return list;
}

std::vector<Trajectory> parse_trajectories(const Json& value) {
  std::vector<Trajectory> trajectories;
  for (const auto& entry : value) {
    expect_keys(entry, {"agent", "times", "positions"}, "trajectory");
    Trajectory trajectory;
    trajectory.agent = as_int(entry.at("agent"), "trajectory agent");
    for (const auto& t : entry.at("times")) {
      trajectory.times.push_back(as_number(t, "trajectory time"));
    }
    for (const auto& p : entry.at("positions")) {
      trajectory.positions.push_back(as_point(p, "trajectory position"));
    }
    if (trajectory.times.size() != trajectory.positions.size()) {
      throw ParseError("trajectory times and positions must have equal length");
    }
    trajectories.push_back(std::move(trajectory));
  }
  return trajectories;
}

Json report_json(const VerificationReport& report) {
  Json membership = Json::array();
  for (const auto& violation : report.membership_violations) {
    membership.push_back({{"agent", violation.agent},
                          {"t", round_to_9_digits(violation.t)},
                          {"goal_ball", violation.goal_ball},
                          {"slack", round_to_9_digits(violation.slack)}});
  }
  Json collisions = Json::array();
  for (const auto& violation : report.collisions) {
    collisions.push_back({{"agent_a", violation.agent_a},
                          {"agent_b", violation.agent_b},
                          {"t", round_to_9_digits(violation.t)},
                          {"distance", round_to_9_digits(violation.distance)},
                          {"required", round_to_9_digits(violation.required)}});
  }
  return Json{{"all_in_sets", report.all_in_sets},
              {"no_collisions", report.no_collisions},
              {"implication_holds", report.implication_holds},
              {"continuous_certified", report.continuous_certified},
              {"min_pair_distance", extended_number(report.min_pair_distance)},
              {"min_pair_slack", extended_number(report.min_pair_slack)},
              {"min_membership_slack", extended_number(report.min_membership_slack)},
              {"sample_count", report.sample_count},
              {"membership_violations", membership},
              {"collisions", collisions}};
}

VerificationReport parse_report(const Json& value) {
  expect_keys(value,
              {"all_in_sets", "no_collisions", "implication_holds",
               "continuous_certified", "min_pair_distance", "min_pair_slack",
               "min_membership_slack", "sample_count", "membership_violations",
               "collisions"},
              "verification");
  VerificationReport report;
  report.all_in_sets = value.at("all_in_sets").get<bool>();
  report.no_collisions = value.at("no_collisions").get<bool>();
  report.implication_holds = value.at("implication_holds").get<bool>();
  report.continuous_certified = value.at("continuous_certified").get<bool>();
  report.min_pair_distance =
      parse_extended_number(value.at("min_pair_distance"), "min_pair_distance");
  report.min_pair_slack =
      parse_extended_number(value.at("min_pair_slack"), "min_pair_slack");
  report.min_membership_slack =
      parse_extended_number(value.at("min_membership_slack"), "min_membership_slack");
  report.sample_count = as_int(value.at("sample_count"), "sample_count");
  for (const auto& violation : value.at("membership_violations")) {
    report.membership_violations.push_back(
        {as_int(violation.at("agent"), "agent"), as_number(violation.at("t"), "t"),
         violation.at("goal_ball").get<bool>(), as_number(violation.at("slack"), "slack")});
  }
  for (const auto& violation : value.at("collisions")) {
    report.collisions.push_back({as_int(violation.at("agent_a"), "agent_a"),
                                 as_int(violation.at("agent_b"), "agent_b"),
                                 as_number(violation.at("t"), "t"),
                                 as_number(violation.at("distance"), "distance"),
                                 as_number(violation.at("required"), "required")});
  }
  return report;
}

Json parse_text(const std::string& text, const char* what) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(std::string("invalid JSON in ") + what);
  return doc;
}

}  // namespace

double round_to_9_digits(double value) {
  if (!std::isfinite(value)) return value;
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return std::strtod(buffer, nullptr);
}

WeightMatrix ScenarioInput::build_weight_matrix() const {
  if (weights) return *weights;
  return build_weights(*scenario);
}

int ScenarioInput::agent_count() const {
  return weights ? weights->agent_count() : scenario->agent_count();
}

double ScenarioInput::safety_bound() const {
  if (scenario) return scenario->safety.bound();
  if (raw_safety) return *raw_safety;
  throw std::runtime_error("the scenario provides no safety distance");
}

ScenarioInput parse_scenario(const std::string& text) {
  return parse_scenario_json(parse_text(text, "scenario document"));
}

std::string write_scenario(const ScenarioInput& input) {
  return scenario_json(input).dump(2) + "\n";
}

std::string write_result(const ResultDocument& document) {
  Json doc;
  doc["scenario"] = scenario_json(document.input);
  doc["assignment"] = assignment_json(document.result, document.robust);
  if (document.schedule) doc["schedule"] = schedule_json(*document.schedule);
  if (document.trajectories) doc["trajectories"] = trajectories_json(*document.trajectories);
  if (document.report) doc["verification"] = report_json(*document.report);
  return doc.dump(2) + "\n";
}

ResultDocument read_result(const std::string& text) {
  const Json doc = parse_text(text, "result document");
  expect_keys(doc, {"scenario", "assignment", "schedule", "trajectories", "verification"},
              "result document");
  if (!doc.contains("scenario") || !doc.contains("assignment")) {
    throw ParseError("result documents need scenario and assignment sections");
  }
  ResultDocument document;
  document.input = parse_scenario_json(doc.at("scenario"));
  document.result = parse_assignment(doc.at("assignment"), document.robust);
  if (doc.contains("schedule")) {
    document.schedule =
        parse_schedule(doc.at("schedule"), document.result, document.input.agent_count());
  }
  if (doc.contains("trajectories")) {
    document.trajectories = parse_trajectories(doc.at("trajectories"));
  }
  if (doc.contains("verification")) {
    document.report = parse_report(doc.at("verification"));
  }
  return document;
}

void write_trajectories_csv(std::ostream& out,
                            const std::vector<Trajectory>& trajectories, int dim) {
  out << "t,agent,x,y" << (dim >= 3 ? ",z" : "") << "\n";
  if (trajectories.empty()) return;
  const std::size_t samples = trajectories.front().times.size();
  char buffer[40];
  const auto emit = [&](double value) {
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    out << buffer;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    for (const Trajectory& trajectory : trajectories) {
      emit(trajectory.times[k]);
      out << ',' << trajectory.agent;
      for (int c = 0; c < dim; ++c) {
        out << ',';
        emit(trajectory.positions[k][c]);
      }
      out << '\n';
    }
  }
}

}  // namespace lexbap
