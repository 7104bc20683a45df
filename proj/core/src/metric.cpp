#include "lexbap/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lexbap {
namespace {

int table_index(std::span<const double> p, int size) {
  if (p.size() != 1) {
    throw std::invalid_argument("table metric points are 1-D indices");
  }
  const double value = p[0];
  const int index = static_cast<int>(std::llround(value));
  if (std::abs(value - index) > 1e-9 || index < 0 || index >= size) {
    throw std::invalid_argument("table metric point is not a valid index");
  }
  return index;
}

}  // namespace

Metric Metric::custom_table(const std::vector<std::vector<double>>& table) {
  const int size = static_cast<int>(table.size());
  if (size < 1) throw std::invalid_argument("empty distance table");
  Metric metric(MetricKind::custom_table);
  metric.size_ = size;
  metric.table_.resize(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    if (static_cast<int>(table[a].size()) != size) {
      throw std::invalid_argument("distance table must be square");
    }
    for (int b = 0; b < size; ++b) {
      const double d = table[a][b];
      if (!std::isfinite(d) || d < 0.0) {
        throw std::invalid_argument("table distances must be finite and non-negative");
      }
      metric.table_[static_cast<std::size_t>(a) * size + b] = d;
    }
  }
  for (int a = 0; a < size; ++a) {
    if (metric.table_at(a, a) != 0.0) {
      throw std::invalid_argument("distance table diagonal must be zero");
    }
    for (int b = a + 1; b < size; ++b) {
      if (metric.table_at(a, b) != metric.table_at(b, a)) {
        throw std::invalid_argument("distance table must be symmetric");
      }
    }
  }
  // Exhaustive triangle-inequality validation over all triples.
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      for (int c = 0; c < size; ++c) {
        if (metric.table_at(a, b) >
            metric.table_at(a, c) + metric.table_at(c, b) + 1e-12) {
          throw std::invalid_argument(
              "distance table violates the triangle inequality at (" +
              std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return metric;
}

double Metric::distance(std::span<const double> p, std::span<const double> q) const {
  if (p.size() != q.size()) {
    throw std::invalid_argument("points have different dimensions");
  }
  switch (kind_) {
    case MetricKind::euclidean: {
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        sum += d * d;
      }
      return std::sqrt(sum);
    }
    case MetricKind::manhattan: {
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
      return sum;
    }
    case MetricKind::chebyshev: {
      double max = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        max = std::max(max, std::abs(p[i] - q[i]));
      }
      return max;
    }
    case MetricKind::custom_table:
      return table_at(table_index(p, size_), table_index(q, size_));
  }
  throw std::logic_error("unreachable metric kind");
}

double metric_distance(const Metric& metric, std::span<const double> p,
                       std::span<const double> q) {
  return metric.distance(p, q);
}

}  // namespace lexbap
