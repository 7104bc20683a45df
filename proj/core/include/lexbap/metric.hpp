#pragma once

#include <span>
#include <vector>

#include "lexbap/types.hpp"

namespace lexbap {

using Point = std::vector<double>;

enum class MetricKind { euclidean, manhattan, chebyshev, custom_table };

/// Distance function satisfying non-negativity, symmetry, and the triangle
/// inequality. The built-in norms work in any dimension. A custom table
/// defines distances over a finite universe addressed by 1-D index points;
/// its triangle inequality is validated exhaustively at construction.
class Metric {
 public:
  static Metric euclidean() { return Metric(MetricKind::euclidean); }
  static Metric manhattan() { return Metric(MetricKind::manhattan); }
  static Metric chebyshev() { return Metric(MetricKind::chebyshev); }
  static Metric custom_table(const std::vector<std::vector<double>>& table);

  MetricKind kind() const { return kind_; }
  int table_size() const { return size_; }
  double table_at(int a, int b) const { return table_[static_cast<std::size_t>(a) * size_ + b]; }

  /// d(p, q). Throws std::invalid_argument on dimension mismatch or, for
  /// table metrics, on non-index points.
  double distance(std::span<const double> p, std::span<const double> q) const;

 private:
  explicit Metric(MetricKind kind) : kind_(kind) {}

  MetricKind kind_;
  int size_ = 0;
  std::vector<double> table_;
};

double metric_distance(const Metric& metric, std::span<const double> p,
                       std::span<const double> q);

}  // namespace lexbap
