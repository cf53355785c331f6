#include "linthresh/linear_fit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "linthresh/error.hpp"

namespace linthresh {

namespace {

void check_count(std::size_t count, std::size_t min_suffix) {
  if (count < min_suffix) {
    throw InsufficientSuffix("suffix has " + std::to_string(count) +
                             " points, minimum is " + std::to_string(min_suffix));
  }
}

void check_spread(double sxx_centered, double sxx_raw, double tol) {
  if (!(sxx_centered > tol * tol * sxx_raw) || sxx_centered <= 0.0) {
    throw DegenerateDesign("suffix covariate values are all equal");
  }
}

}  // namespace

LinearFit suffix_ls_fit(const SuffixStats& stats, std::size_t k, const FitOptions& options) {
  if (k >= stats.size()) {
    throw std::out_of_range("suffix rank " + std::to_string(k) + " out of range");
  }
  const SuffixTuple& t = stats.at(k);
  check_count(t.count, std::max<std::size_t>(options.min_suffix, 2));
  check_spread(t.cxx, t.sxx, options.degeneracy_tol);

  LinearFit fit;
  fit.n_used = t.count;
  fit.mean_x = t.mean_x;
  fit.mean_y = t.mean_y;
  fit.sxx_centered = t.cxx;
  fit.beta = t.cxy / t.cxx;
  fit.alpha = t.mean_y - fit.beta * t.mean_x;
  fit.rss = std::max(0.0, t.cyy - fit.beta * t.cxy);
  return fit;
}

double empirical_loss(const SuffixStats& stats, std::size_t k, const LinearFit& fit) {
  const std::size_t count = stats.at(k).count;
  if (fit.n_used != count) {
    throw std::invalid_argument("fit was not produced for suffix rank " + std::to_string(k));
  }
  return fit.rss / static_cast<double>(count);
}

LinearFit fit_at_or_above(const Sample& sample, double threshold, const FitOptions& options) {
  double sum_x = 0.0;
  double sum_y = 0.0;
  double sxx_raw = 0.0;
  std::size_t m = 0;
  for (const Point& p : sample.points()) {
    if (p.x >= threshold) {
      sum_x += p.x;
      sum_y += p.y;
      sxx_raw += p.x * p.x;
      ++m;
    }
  }
  check_count(m, std::max<std::size_t>(options.min_suffix, 2));

  LinearFit fit;
  fit.n_used = m;
  fit.mean_x = sum_x / static_cast<double>(m);
  fit.mean_y = sum_y / static_cast<double>(m);
  double sxx = 0.0;
  double sxy = 0.0;
  for (const Point& p : sample.points()) {
    if (p.x >= threshold) {
      const double dx = p.x - fit.mean_x;
      sxx += dx * dx;
      sxy += dx * (p.y - fit.mean_y);
    }
  }
  check_spread(sxx, sxx_raw, options.degeneracy_tol);
  fit.sxx_centered = sxx;
  fit.beta = sxy / sxx;
  fit.alpha = fit.mean_y - fit.beta * fit.mean_x;

  double rss = 0.0;
  for (const Point& p : sample.points()) {
    if (p.x >= threshold) {
      const double r = p.y - fit.predict(p.x);
      rss += r * r;
    }
  }
  fit.rss = rss;
  return fit;
}

}  // namespace linthresh
