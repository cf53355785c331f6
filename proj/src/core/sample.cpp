#include "linthresh/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "linthresh/error.hpp"

namespace linthresh {

namespace {

std::vector<Point> zip(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::InvalidSample,
                "x and y lengths differ (" + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()) + ")");
  }
  std::vector<Point> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = {x[i], y[i]};
  return out;
}

}  // namespace

Sample::Sample(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < kMinSize) {
    throw Error(ErrorCode::InvalidSample,
                "sample needs at least 3 points, got " + std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw Error(ErrorCode::InvalidSample,
                  "non-finite value at observation " + std::to_string(i));
    }
  }
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
    return points_[a].x < points_[b].x;
  });
}

Sample::Sample(std::span<const double> x, std::span<const double> y) : Sample(zip(x, y)) {}

}  // namespace linthresh
