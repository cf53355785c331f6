#include "linthresh/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "linthresh/error.hpp"

namespace linthresh {

namespace {

template <typename Value>
std::size_t argmin_low_tie(const std::vector<ProfileEntry>& entries, Value value) {
  if (entries.empty()) throw NoCandidates("empty loss profile");
  double best = std::numeric_limits<double>::infinity();
  for (const ProfileEntry& e : entries) best = std::min(best, value(e));
  const double tol = kTieTolerance * (1.0 + std::abs(best));
  // entries are ascending in u, so the first hit is the smallest u.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (value(entries[i]) - best <= tol) return i;
  }
  return 0;  // unreachable unless PL is NaN
}

}  // namespace

ThresholdEstimate estimate_threshold(const LossProfile& profile) {
  const std::size_t i =
      argmin_low_tie(profile.entries, [](const ProfileEntry& e) { return e.penalized; });
  const ProfileEntry& e = profile.entries[i];
  ThresholdEstimate out;
  out.u_hat = e.u;
  out.profile_index = i;
  out.penalized_min = e.penalized;
  out.fit_at_u_hat = e.fit;
  out.n = profile.sample_size;
  out.gamma_n = profile.gamma_n;
  out.lambda_n = profile.lambda_n;
  out.candidate_count = profile.entries.size();
  return out;
}

std::size_t argmin_penalized(const LossProfile& profile, double lambda_n) {
  return argmin_low_tie(profile.entries, [lambda_n](const ProfileEntry& e) {
    return e.loss + lambda_n * e.penalty;
  });
}

double two_sided_p_value(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

Refit refit_beyond(const Sample& sample, double u_hat, double psi, std::size_t min_points) {
  if (!std::isfinite(psi) || psi < 0.0) {
    throw Error(ErrorCode::InvalidConfig, "refit offset psi must be finite and >= 0");
  }
  Refit out;
  out.threshold = u_hat + psi;
  out.fit = fit_at_or_above(sample, out.threshold, {.min_suffix = std::max<std::size_t>(min_points, 3)});

  const LinearFit& f = out.fit;
  const double m = static_cast<double>(f.n_used);
  out.sigma2 = f.rss / (m - 2.0);

  // Inverse of [[m, Sx], [Sx, Sxx]] written with centered moments.
  const double inv_cxx = 1.0 / f.sxx_centered;
  out.covariance.aa = out.sigma2 * (1.0 / m + f.mean_x * f.mean_x * inv_cxx);
  out.covariance.ab = -out.sigma2 * f.mean_x * inv_cxx;
  out.covariance.bb = out.sigma2 * inv_cxx;

  out.se_alpha = std::sqrt(out.covariance.aa);
  out.se_beta = std::sqrt(out.covariance.bb);
  out.z_alpha = out.se_alpha > 0.0 ? f.alpha / out.se_alpha : std::numeric_limits<double>::infinity();
  out.z_beta = out.se_beta > 0.0 ? f.beta / out.se_beta : std::numeric_limits<double>::infinity();
  out.p_alpha = two_sided_p_value(out.z_alpha);
  out.p_beta = two_sided_p_value(out.z_beta);
  return out;
}

ThresholdEstimate estimate(const Sample& sample, const PenaltyConfig& config, std::optional<double> psi) {
  const LossProfile profile = loss_profile(sample, config);
  ThresholdEstimate est = estimate_threshold(profile);
  if (psi) {
    est.psi = *psi;
    est.refit = refit_beyond(sample, est.u_hat, *psi);
  }
  return est;
}

SweepResult c_sweep(const Sample& sample, const PenaltyConfig& config, std::span<const double> c_grid) {
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    if (!std::isfinite(c_grid[i]) || c_grid[i] < 0.0) {
      throw Error(ErrorCode::InvalidConfig, "c grid values must be finite and >= 0");
    }
    if (i > 0 && c_grid[i] < c_grid[i - 1]) {
      throw Error(ErrorCode::InvalidConfig,
                  "c grid must be non-decreasing (index " + std::to_string(i) + ")");
    }
  }
  PenaltyConfig base = config;
  base.c = 0.0;
  const LossProfile profile = loss_profile(sample, base);
  const double rate = std::pow(static_cast<double>(sample.size()), -config.xi);

  SweepResult out;
  out.gamma_n = profile.gamma_n;
  out.n = sample.size();
  out.points.reserve(c_grid.size());
  for (double c : c_grid) {
    const double u = profile.entries[argmin_penalized(profile, c * rate)].u;
    out.points.push_back({c, u});
    if (out.plateaus.empty() || out.plateaus.back().u_hat != u) {
      out.plateaus.push_back({u, c, c, 1});
    } else {
      out.plateaus.back().c_last = c;
      out.plateaus.back().grid_points += 1;
    }
  }
  return out;
}

std::vector<double> airquality_c_grid() {
  std::vector<double> grid;
  grid.reserve(10001 + 14000 + 3500);
  for (int i = 0; i <= 10000; ++i) grid.push_back(i / 1000.0);
  for (int i = 1; i <= 14000; ++i) grid.push_back(10.0 + i / 100.0);
  for (int i = 1; i <= 3500; ++i) grid.push_back(150.0 + i / 10.0);
  return grid;
}

}  // namespace linthresh
