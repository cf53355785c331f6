#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linthresh/linear_fit.hpp"
#include "linthresh/penalty.hpp"
#include "linthresh/profile.hpp"
#include "linthresh/sample.hpp"

namespace linthresh {

/// Symmetric 2x2 matrix over (intercept, slope).
struct SymMatrix2 {
  double aa = 0.0;
  double ab = 0.0;
  double bb = 0.0;

  bool is_psd(double tol = 0.0) const noexcept {
    return aa >= -tol && bb >= -tol && aa * bb - ab * ab >= -tol;
  }
};

/// Least-squares refit on {x >= threshold} with plug-in inference.
struct Refit {
  double threshold = 0.0;
  LinearFit fit;
  /// rss / (m - 2)
  double sigma2 = 0.0;
  /// sigma2 * (sum over the subset of (1, x)(1, x)^T)^-1, i.e. Sigma / n.
  SymMatrix2 covariance;
  double se_alpha = 0.0;
  double se_beta = 0.0;
  double z_alpha = 0.0;
  double z_beta = 0.0;
  /// Two-sided normal p-values for alpha = 0 and beta = 0.
  double p_alpha = 0.0;
  double p_beta = 0.0;
};

struct ThresholdEstimate {
  double u_hat = 0.0;
  /// Position of u_hat within the originating profile.
  std::size_t profile_index = 0;
  double penalized_min = 0.0;
  LinearFit fit_at_u_hat;
  double psi = 0.0;
  std::optional<Refit> refit;
  std::size_t n = 0;
  double gamma_n = 0.0;
  double lambda_n = 0.0;
  std::size_t candidate_count = 0;
};

/// Relative-absolute tolerance under which two PL values count as tied.
inline constexpr double kTieTolerance = 1e-12;

/// Argmin of the penalized column; among values within
/// kTieTolerance * (1 + |PL_min|) of the minimum, the smallest u wins.
ThresholdEstimate estimate_threshold(const LossProfile& profile);

/// Index of the argmin (same tie rule) for PL = loss + lambda_n * penalty.
std::size_t argmin_penalized(const LossProfile& profile, double lambda_n);

/// Fit on {x >= u_hat + psi}. Throws InsufficientSuffix when fewer than
/// `min_points` (at least 3) observations remain, DegenerateDesign when they
/// share one x value.
Refit refit_beyond(const Sample& sample, double u_hat, double psi, std::size_t min_points = 3);

/// Two-sided p-value of a standard normal statistic.
double two_sided_p_value(double z);

/// Profile, argmin and (when psi is given) refit in one call.
ThresholdEstimate estimate(const Sample& sample, const PenaltyConfig& config,
                           std::optional<double> psi = std::nullopt);

struct SweepPoint {
  double c = 0.0;
  double u_hat = 0.0;
};

/// Maximal run of consecutive grid values sharing one estimate.
struct Plateau {
  double u_hat = 0.0;
  double c_first = 0.0;
  double c_last = 0.0;
  std::size_t grid_points = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<Plateau> plateaus;
  double gamma_n = 0.0;
  std::size_t n = 0;
};

/// u_hat(c) along a non-decreasing grid of non-negative c. The profile is
/// built once; only the penalty weight changes per grid value. The c of
/// `config` is ignored.
SweepResult c_sweep(const Sample& sample, const PenaltyConfig& config, std::span<const double> c_grid);

/// The real-data grid: step 0.001 on [0, 10], 0.01 on (10, 150], 0.1 on (150, 500].
std::vector<double> airquality_c_grid();

}  // namespace linthresh
