#pragma once

#include <cstddef>
#include <vector>

#include "linthresh/linear_fit.hpp"
#include "linthresh/penalty.hpp"
#include "linthresh/sample.hpp"
#include "linthresh/suffix_stats.hpp"

namespace linthresh {

struct ProfileEntry {
  /// Candidate threshold; always an observed x value.
  double u = 0.0;
  std::size_t n_suffix = 0;
  LinearFit fit;
  /// Mean squared residual of the suffix fit.
  double loss = 0.0;
  /// f(u), kept so the penalty weight can be swapped without refitting.
  double penalty = 0.0;
  double penalized = 0.0;
};

struct LossProfile {
  std::vector<ProfileEntry> entries;  // ascending in u
  double gamma_n = 0.0;
  double lambda_n = 0.0;
  std::size_t sample_size = 0;
  std::size_t min_suffix = 0;
  /// Candidates dropped because their suffix had no x spread.
  std::size_t excluded_degenerate = 0;
};

/// Order statistic x_(ceil((1 - eta1) n)), the lower empirical quantile.
double empirical_quantile_cutoff(const Sample& sample, double eta1);

/// Smallest admissible suffix: max(3, ceil(eta1 n)).
std::size_t minimum_suffix_size(std::size_t n, double eta1);

/// Evaluates loss and penalized loss at every distinct observed x <= gamma_n
/// whose suffix holds at least minimum_suffix_size points. Throws
/// NoCandidates when nothing survives.
LossProfile loss_profile(const Sample& sample, const PenaltyConfig& config);
LossProfile loss_profile(const Sample& sample, const SuffixStats& stats, const PenaltyConfig& config);

/// Recomputes the penalized column for another penalty weight.
void reweight(LossProfile& profile, double lambda_n);

}  // namespace linthresh
