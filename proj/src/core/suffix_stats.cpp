#include "linthresh/suffix_stats.hpp"

#include <algorithm>

namespace linthresh {

SuffixStats::SuffixStats(const Sample& sample) {
  const std::size_t n = sample.size();
  tuples_.resize(n);
  xs_.resize(n);
  for (std::size_t k = 0; k < n; ++k) xs_[k] = sample.sorted(k).x;

  SuffixTuple acc;
  for (std::size_t k = n; k-- > 0;) {
    const double x = xs_[k];
    const double y = sample.sorted(k).y;

    acc.count += 1;
    acc.sx += x;
    acc.sxx += x * x;
    acc.sy += y;
    acc.syy += y * y;
    acc.sxy += x * y;

    const double inv = 1.0 / static_cast<double>(acc.count);
    const double dx = x - acc.mean_x;
    const double dy = y - acc.mean_y;
    acc.mean_x += dx * inv;
    acc.mean_y += dy * inv;
    acc.cxx += dx * (x - acc.mean_x);
    acc.cyy += dy * (y - acc.mean_y);
    acc.cxy += dx * (y - acc.mean_y);

    tuples_[k] = acc;
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || xs_[k] != xs_[k - 1]) run_starts_.push_back(k);
  }
}

std::size_t SuffixStats::first_rank_at_or_above(double u) const {
  return static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), u) - xs_.begin());
}

SuffixStats build_suffix_stats(const Sample& sample) { return SuffixStats(sample); }

}  // namespace linthresh
