#pragma once

#include <cstddef>
#include <span>

#include "linthresh/error.hpp"
#include "linthresh/sample.hpp"
#include "linthresh/suffix_stats.hpp"

namespace linthresh {

/// Ordinary least-squares line y = alpha + beta * x over some subset.
struct LinearFit {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t n_used = 0;
  double rss = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  /// Centered x sum of squares of the subset (n_used times the x variance).
  double sxx_centered = 0.0;

  double predict(double x) const noexcept { return alpha + beta * x; }
};

struct FitOptions {
  std::size_t min_suffix = 3;
  /// The fit is degenerate when the suffix standard deviation of x is at most
  /// this fraction of its root mean square (centered Sxx <= tol^2 * raw Sxx).
  double degeneracy_tol = 1e-12;
};

/// Least-squares fit over the suffix at sorted rank k.
/// Throws InsufficientSuffix when fewer than min_suffix points remain and
/// DegenerateDesign when the suffix x values are (numerically) all equal.
LinearFit suffix_ls_fit(const SuffixStats& stats, std::size_t k, const FitOptions& options = {});

/// Mean squared residual over the suffix, rss / n_k.
double empirical_loss(const SuffixStats& stats, std::size_t k, const LinearFit& fit);

/// Two-pass least-squares fit over the points with x >= threshold.
LinearFit fit_at_or_above(const Sample& sample, double threshold, const FitOptions& options = {});

}  // namespace linthresh
