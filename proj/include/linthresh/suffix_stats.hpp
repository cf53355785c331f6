#pragma once

#include <cstddef>
#include <vector>

#include "linthresh/sample.hpp"

namespace linthresh {

/// Sufficient statistics of the observations at sorted ranks k..n-1.
///
/// Raw sums are in data units. The centered co-moments (cxx, cyy, cxy) are
/// accumulated alongside with a one-point-at-a-time update, so they do not
/// suffer the cancellation of `sxx - sx*sx/n` when x sits far from 0.
struct SuffixTuple {
  std::size_t count = 0;
  double sx = 0.0;
  double sxx = 0.0;
  double sy = 0.0;
  double syy = 0.0;
  double sxy = 0.0;

  double mean_x = 0.0;
  double mean_y = 0.0;
  double cxx = 0.0;
  double cyy = 0.0;
  double cxy = 0.0;
};

/// Right-to-left cumulative statistics over the x-sorted sample.
///
/// at(k) covers the points of sorted rank >= k. When k is the first rank of a
/// run of equal x values (see run_starts()), that is exactly {i : x_i >= x_(k)}.
class SuffixStats {
 public:
  explicit SuffixStats(const Sample& sample);

  std::size_t size() const noexcept { return tuples_.size(); }
  const SuffixTuple& at(std::size_t rank) const { return tuples_.at(rank); }

  /// x value at sorted rank k.
  double x_at(std::size_t rank) const { return xs_.at(rank); }

  /// First sorted rank of every distinct x value, ascending.
  const std::vector<std::size_t>& run_starts() const noexcept { return run_starts_; }

  /// First sorted rank whose x is >= u, or size() if none.
  std::size_t first_rank_at_or_above(double u) const;

 private:
  std::vector<SuffixTuple> tuples_;
  std::vector<double> xs_;
  std::vector<std::size_t> run_starts_;
};

/// One pass over the sample in descending-x order. The summation order is
/// fixed by the sorted permutation, so results are bit-reproducible.
SuffixStats build_suffix_stats(const Sample& sample);

}  // namespace linthresh
