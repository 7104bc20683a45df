#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lexbap/simulator.hpp"

namespace lexbap {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed scenario document. Exactly one of the geometric form
/// (scenario) and the raw weight-matrix form is present.
struct ScenarioInput {
  std::optional<Scenario> scenario;
  std::optional<WeightMatrix> weights;
  std::optional<double> raw_safety;  // raw form only
  std::vector<std::string> agent_ids;
  std::vector<std::string> target_ids;
  double v_ref = 10.0;
  SimConfig sim;

  bool geometric() const { return scenario.has_value(); }
  WeightMatrix build_weight_matrix() const;
  int agent_count() const;

  /// Global safety bound; throws when the document provides none.
  double safety_bound() const;
};

/// Parses a scenario document from JSON text. Unknown keys are rejected.
ScenarioInput parse_scenario(const std::string& text);

std::string write_scenario(const ScenarioInput& input);

/// Everything a pipeline stage knows so far; later stages fill the
/// optional sections.
struct ResultDocument {
  ScenarioInput input;
  SequentialResult result;
  bool robust = false;
  std::optional<SafeSchedule> schedule;
  std::optional<std::vector<Trajectory>> trajectories;
  std::optional<VerificationReport> report;
};

/// Serializes a result document. Floating-point values are quantized to
/// 9 significant digits, so write(read(write(x))) == write(x).
std::string write_result(const ResultDocument& document);

ResultDocument read_result(const std::string& text);

/// CSV export with header t,agent,x,y[,z], time-major row order.
void write_trajectories_csv(std::ostream& out,
                            const std::vector<Trajectory>& trajectories, int dim);

/// Quantizes to 9 significant decimal digits (the serialization precision).
double round_to_9_digits(double value);

}  // namespace lexbap
