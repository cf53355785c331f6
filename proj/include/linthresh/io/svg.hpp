#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "linthresh/estimator.hpp"
#include "linthresh/profile.hpp"

namespace linthresh::io {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  /// Draw as a right-continuous step function instead of a polyline.
  bool step = false;
  std::string color = "#1f77b4";
};

struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  /// log10 x axis; non-positive x values are dropped.
  bool log_x = false;
  std::vector<SvgSeries> series;
  /// Optional vertical marker, e.g. the selected threshold.
  std::vector<double> x_markers;
};

/// Self-contained SVG 1.1 document.
std::string render_svg(const SvgChart& chart);
void write_svg(const SvgChart& chart, const std::filesystem::path& path);

/// Loss and penalized loss against u, with u_hat marked.
SvgChart profile_chart(const LossProfile& profile, double u_hat);
/// u_hat(c) step chart.
SvgChart sweep_chart(const SweepResult& sweep);

}  // namespace linthresh::io
