#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexbap {

/// An agent-task pair of the bipartite assignment graph. Indices are
/// 0-based positions into the weight matrix rows (agents) and columns
/// (tasks).
struct Edge {
  int agent = 0;
  int task = 0;
  auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

/// No admissible assignment exists for the requested subgraph.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration was requested for an instance too large to
/// enumerate.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Weight comparison tolerance. Geometric weights are irrational, so two
// weights count as equal iff |x-y| <= 1e-9 * max(1, |x|, |y|). Integer
// instances compare exactly under this rule.
inline bool weights_equal(double x, double y) {
  return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
}

/// A robustness margin: a non-negative real or positive infinity. Infinity
/// is a distinguished state, not a large float.
class Margin {
 public:
  Margin() = default;

  static Margin finite(double value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("finite margin must be a non-negative real");
    }
    Margin m;
    m.value_ = value;
    m.infinite_ = false;
    return m;
  }

  static Margin infinity() {
    Margin m;
    m.infinite_ = true;
    return m;
  }

  bool is_infinite() const { return infinite_; }

  /// Finite value; throws when the margin is infinite.
  double value() const {
    if (infinite_) throw std::logic_error("margin is infinite");
    return value_;
  }

  /// True for infinity and for any margin strictly above zero.
  bool is_positive() const { return infinite_ || value_ > 0.0; }

  bool operator==(const Margin& other) const {
    if (infinite_ != other.infinite_) return false;
    return infinite_ || weights_equal(value_, other.value_);
  }

  bool operator<(const Margin& other) const {
    if (infinite_) return false;
    if (other.infinite_) return true;
    return value_ < other.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Dense m x n matrix of non-negative assignment weights, m agents by
/// n tasks with m > 1 and 1 <= n <= m.
class WeightMatrix {
 public:
  WeightMatrix(int agents, int tasks, std::vector<double> weights)
      : m_(agents), n_(tasks), w_(std::move(weights)) {
    if (m_ <= 1) throw std::invalid_argument("need more than one agent");
    if (n_ < 1 || n_ > m_) throw std::invalid_argument("need 1 <= tasks <= agents");
    if (w_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("weight data does not match matrix shape");
    }
    for (double w : w_) {
      if (!std::isfinite(w) || w < 0.0) {
        throw std::invalid_argument("weights must be finite and non-negative");
      }
    }
  }

  static WeightMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty weight matrix");
    const std::size_t cols = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw std::invalid_argument("ragged weight matrix");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return WeightMatrix(static_cast<int>(rows.size()), static_cast<int>(cols),
                        std::move(flat));
  }

  int agent_count() const { return m_; }
  int task_count() const { return n_; }

  double operator()(int agent, int task) const {
    return w_[static_cast<std::size_t>(agent) * n_ + task];
  }

  double at(int agent, int task) const {
    if (agent < 0 || agent >= m_ || task < 0 || task >= n_) {
      throw std::out_of_range("weight index out of range");
    }
    return (*this)(agent, task);
  }

 private:
  int m_;
  int n_;
  std::vector<double> w_;
};

/// A subgraph of the assignment graph: ordered agent and task subsets plus
/// a permitted edge set drawn from their product.
struct SubgraphSpec {
  std::vector<int> agents;
  std::vector<int> tasks;
  EdgeList edges;

  /// Complete bipartite subgraph over explicit vertex subsets.
  static SubgraphSpec complete(std::vector<int> agents, std::vector<int> tasks) {
    SubgraphSpec spec;
    spec.agents = std::move(agents);
    spec.tasks = std::move(tasks);
    spec.edges.reserve(spec.agents.size() * spec.tasks.size());
    for (int i : spec.agents) {
      for (int j : spec.tasks) spec.edges.push_back({i, j});
    }
    return spec;
  }

  /// The full assignment graph of a weight matrix.
  static SubgraphSpec full_graph(const WeightMatrix& w) {
    std::vector<int> agents(w.agent_count());
    std::vector<int> tasks(w.task_count());
    for (int i = 0; i < w.agent_count(); ++i) agents[i] = i;
    for (int j = 0; j < w.task_count(); ++j) tasks[j] = j;
    return complete(std::move(agents), std::move(tasks));
  }

  SubgraphSpec without_edge(const Edge& e) const {
    SubgraphSpec out = *this;
    std::erase(out.edges, e);
    return out;
  }

  bool is_complete_bipartite() const {
    return edges.size() == agents.size() * tasks.size();
  }

  /// Checks the structural invariants; throws std::invalid_argument on
  /// violation. `w` bounds the admissible index ranges.
  void validate(const WeightMatrix& w) const;
};

/// A set of agent-task pairs; admissible when every task of the considered
/// subgraph is covered exactly once and no agent is used twice.
struct Assignment {
  EdgeList pairs;

  bool contains(const Edge& e) const {
    return std::find(pairs.begin(), pairs.end(), e) != pairs.end();
  }

  void sort() { std::sort(pairs.begin(), pairs.end()); }

  bool operator==(const Assignment& other) const {
    auto a = pairs;
    auto b = other.pairs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
};

/// Everything the bottleneck operators report for one subgraph.
struct BottleneckSummary {
  double value = 0.0;
  EdgeList bottleneck_edges;   // weight equal to value, sorted (agent, task)
  EdgeList max_margin_edges;   // subset of bottleneck_edges
  Margin margin;
};

}  // namespace lexbap
