#include "lexbap/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace lexbap {

SafetySpec SafetySpec::uniform(double s) {
  if (!std::isfinite(s) || s < 0.0) {
    throw std::invalid_argument("safety distance must be finite and non-negative");
  }
  SafetySpec spec;
  spec.uniform_ = true;
  spec.bound_ = s;
  return spec;
}

SafetySpec SafetySpec::pairwise(const std::vector<std::vector<double>>& values) {
  const int size = static_cast<int>(values.size());
  if (size < 2) throw std::invalid_argument("safety matrix needs at least two agents");
  SafetySpec spec;
  spec.uniform_ = false;
  spec.size_ = size;
  spec.values_.resize(static_cast<std::size_t>(size) * size, 0.0);
  for (int i = 0; i < size; ++i) {
    if (static_cast<int>(values[i].size()) != size) {
      throw std::invalid_argument("safety matrix must be square");
    }
    for (int j = 0; j < size; ++j) {
      const double s = values[i][j];
      if (!std::isfinite(s) || s < 0.0) {
        throw std::invalid_argument("safety distances must be finite and non-negative");
      }
      if (values[j][i] != s) {
        throw std::invalid_argument("safety matrix must be symmetric");
      }
      spec.values_[static_cast<std::size_t>(i) * size + j] = s;
      if (i != j) spec.bound_ = std::max(spec.bound_, s);
    }
  }
  return spec;
}

double SafetySpec::between(int i, int j) const {
  if (uniform_) return bound_;
  if (i < 0 || j < 0 || i >= size_ || j >= size_) {
    throw std::out_of_range("safety pair index out of range");
  }
  return values_[static_cast<std::size_t>(i) * size_ + j];
}

void Scenario::validate() const {
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
  if (agent_count() <= 1) throw std::invalid_argument("need more than one agent");
  if (task_count() < 1 || task_count() > agent_count()) {
    throw std::invalid_argument("need 1 <= targets <= agents");
  }
  for (const Point& p : initial_positions) {
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("agent position dimension mismatch");
    }
  }
  for (const Point& g : targets) {
    if (static_cast<int>(g.size()) != dim) {
      throw std::invalid_argument("target position dimension mismatch");
    }
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("horizon must be positive");
  }
  if (!safety.is_uniform() && safety.size() != agent_count()) {
    throw std::invalid_argument("safety matrix size must match the agent count");
  }
  if (metric.kind() == MetricKind::custom_table) {
    // Table metrics address points by index; every coordinate must resolve.
    for (const Point& p : initial_positions) metric.distance(p, p);
    for (const Point& g : targets) metric.distance(g, g);
  }
}

WeightMatrix build_weights(const Scenario& scenario) {
  scenario.validate();
  const int m = scenario.agent_count();
  const int n = scenario.task_count();
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      weights.push_back(
          scenario.distance(scenario.initial_positions[i], scenario.targets[j]));
    }
  }
  return WeightMatrix(m, n, std::move(weights));
}

}  // namespace lexbap
