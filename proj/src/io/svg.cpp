#include "linthresh/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "linthresh/error.hpp"

namespace linthresh::io {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void widen() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo <= 0.0) {
      const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string render_svg(const SvgChart& chart) {
  auto tx = [&](double x) { return chart.log_x ? std::log10(x) : x; };
  Range xr, yr;
  for (const SvgSeries& s : chart.series) {
    for (auto [x, y] : s.points) {
      if (chart.log_x && x <= 0.0) continue;
      if (!std::isfinite(y)) continue;
      xr.add(tx(x));
      yr.add(y);
    }
  }
  xr.widen();
  yr.widen();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (tx(x) - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream os;
  os << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
     << R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" << kWidth << R"(" height=")" << kHeight
     << R"(" font-family="sans-serif" font-size="12">)" << '\n'
     << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n'
     << R"(<text x=")" << kWidth / 2 << R"(" y="20" text-anchor="middle" font-size="14">)" << escape(chart.title)
     << "</text>\n"
     << R"(<rect x=")" << kLeft << R"(" y=")" << kTop << R"(" width=")" << pw << R"(" height=")" << ph
     << R"(" fill="none" stroke="black"/>)" << '\n';

  // Axis ticks: five per axis.
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double sx = kLeft + pw * i / 4.0;
    const double sy = kTop + ph - ph * i / 4.0;
    os << R"(<text x=")" << sx << R"(" y=")" << kTop + ph + 16 << R"(" text-anchor="middle">)"
       << num(chart.log_x ? std::pow(10.0, fx) : fx) << "</text>\n";
    os << R"(<text x=")" << kLeft - 6 << R"(" y=")" << sy + 4 << R"(" text-anchor="end">)" << num(fy)
       << "</text>\n";
  }
  os << R"(<text x=")" << kLeft + pw / 2 << R"(" y=")" << kHeight - 10 << R"(" text-anchor="middle">)"
     << escape(chart.x_label) << "</text>\n";
  os << R"(<text x="14" y=")" << kTop + ph / 2 << R"(" text-anchor="middle" transform="rotate(-90 14 )" << kTop + ph / 2
     << ")\">" << escape(chart.y_label) << "</text>\n";

  for (double m : chart.x_markers) {
    if (chart.log_x && m <= 0.0) continue;
    os << R"(<line x1=")" << px(m) << R"(" x2=")" << px(m) << R"(" y1=")" << kTop << R"(" y2=")" << kTop + ph
       << R"(" stroke="#d62728" stroke-dasharray="4 3"/>)" << '\n';
  }

  double legend_y = kTop + 14;
  for (const SvgSeries& s : chart.series) {
    std::ostringstream path;
    bool first = true;
    double prev_y = 0.0;
    for (auto [x, y] : s.points) {
      if ((chart.log_x && x <= 0.0) || !std::isfinite(y)) continue;
      if (first) {
        path << 'M' << px(x) << ' ' << py(y);
        first = false;
      } else {
        if (s.step) path << " L" << px(x) << ' ' << py(prev_y);
        path << " L" << px(x) << ' ' << py(y);
      }
      prev_y = y;
    }
    if (!first) {
      os << R"(<path d=")" << path.str() << R"(" fill="none" stroke=")" << s.color << R"(" stroke-width="1.5"/>)"
         << '\n';
    }
    if (!s.label.empty()) {
      os << R"(<text x=")" << kLeft + pw - 8 << R"(" y=")" << legend_y << R"(" text-anchor="end" fill=")" << s.color
         << R"(">)" << escape(s.label) << "</text>\n";
      legend_y += 14;
    }
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const SvgChart& chart, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, path.string() + ": cannot open for writing");
  out << render_svg(chart);
  if (!out) throw Error(ErrorCode::Io, path.string() + ": write failed");
}

SvgChart profile_chart(const LossProfile& profile, double u_hat) {
  SvgChart chart{.title = "Empirical loss profile", .x_label = "u", .y_label = "loss"};
  SvgSeries loss{.label = "loss", .step = true};
  SvgSeries pl{.label = "penalized", .step = true, .color = "#2ca02c"};
  for (const ProfileEntry& e : profile.entries) {
    loss.points.emplace_back(e.u, e.loss);
    pl.points.emplace_back(e.u, e.penalized);
  }
  chart.series = {std::move(loss), std::move(pl)};
  chart.x_markers = {u_hat};
  return chart;
}

SvgChart sweep_chart(const SweepResult& sweep) {
  SvgChart chart{.title = "Estimated threshold against penalty constant", .x_label = "c", .y_label = "u_hat"};
  SvgSeries s{.label = "u_hat(c)", .step = true};
  for (const Plateau& p : sweep.plateaus) {
    s.points.emplace_back(p.c_first, p.u_hat);
    if (p.c_last != p.c_first) s.points.emplace_back(p.c_last, p.u_hat);
  }
  chart.series = {std::move(s)};
  return chart;
}

}  // namespace linthresh::io
