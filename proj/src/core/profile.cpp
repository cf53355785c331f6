#include "linthresh/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linthresh/error.hpp"

namespace linthresh {

namespace {

// (1 - eta1) * n lands a hair above an integer for values like eta1 = 0.05.
constexpr double kRankSlack = 1e-9;

}  // namespace

double empirical_quantile_cutoff(const Sample& sample, double eta1) {
  const double n = static_cast<double>(sample.size());
  auto rank = static_cast<std::size_t>(std::ceil((1.0 - eta1) * n - kRankSlack));
  rank = std::max<std::size_t>(rank, 1);
  rank = std::min(rank, sample.size());
  return sample.sorted(rank - 1).x;
}

std::size_t minimum_suffix_size(std::size_t n, double eta1) {
  const auto tail = static_cast<std::size_t>(std::ceil(eta1 * static_cast<double>(n) - kRankSlack));
  return std::max<std::size_t>(3, tail);
}

LossProfile loss_profile(const Sample& sample, const PenaltyConfig& config) {
  return loss_profile(sample, build_suffix_stats(sample), config);
}

LossProfile loss_profile(const Sample& sample, const SuffixStats& stats, const PenaltyConfig& config) {
  config.validate();
  LossProfile profile;
  profile.sample_size = sample.size();
  profile.gamma_n = empirical_quantile_cutoff(sample, config.eta1);
  profile.lambda_n = config.lambda(sample.size());
  profile.min_suffix = minimum_suffix_size(sample.size(), config.eta1);

  const FitOptions options{.min_suffix = profile.min_suffix};
  const double default_shift = sample.min_x();

  for (std::size_t k : stats.run_starts()) {
    const double u = stats.x_at(k);
    if (u > profile.gamma_n) break;
    if (stats.at(k).count < profile.min_suffix) break;
    if (config.kind == PenaltyKind::Arctan && u < 0.0) {
      throw Error(ErrorCode::InvalidConfig,
                  "arctan penalty is negative at candidate u = " + std::to_string(u));
    }

    ProfileEntry e;
    e.u = u;
    e.n_suffix = stats.at(k).count;
    try {
      e.fit = suffix_ls_fit(stats, k, options);
    } catch (const DegenerateDesign&) {
      ++profile.excluded_degenerate;
      continue;
    }
    e.loss = empirical_loss(stats, k, e.fit);
    e.penalty = config.f(u, default_shift);
    e.penalized = e.loss + profile.lambda_n * e.penalty;
    profile.entries.push_back(e);
  }

  if (profile.entries.empty()) {
    throw NoCandidates("no admissible threshold candidate at or below gamma_n = " +
                       std::to_string(profile.gamma_n));
  }
  return profile;
}

void reweight(LossProfile& profile, double lambda_n) {
  profile.lambda_n = lambda_n;
  for (ProfileEntry& e : profile.entries) e.penalized = e.loss + lambda_n * e.penalty;
}

}  // namespace linthresh
