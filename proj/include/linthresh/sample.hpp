#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace linthresh {

struct Point {
  double x;
  double y;
};

/// Paired (covariate, response) observations with a cached ascending-x
/// permutation. Construction validates: at least 3 points, all finite.
class Sample {
 public:
  static constexpr std::size_t kMinSize = 3;

  explicit Sample(std::vector<Point> points);
  Sample(std::span<const double> x, std::span<const double> y);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }

  /// Indices into points() ordered by x ascending; ties keep input order.
  const std::vector<std::size_t>& sorted_by_x() const noexcept { return order_; }

  /// The i-th smallest point (0-based rank).
  const Point& sorted(std::size_t rank) const { return points_[order_[rank]]; }

  double min_x() const { return sorted(0).x; }
  double max_x() const { return sorted(size() - 1).x; }

 private:
  std::vector<Point> points_;
  std::vector<std::size_t> order_;
};

}  // namespace linthresh
