#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linthresh {

enum class PenaltyKind {
  /// f(u) = max(u - shift, 0)
  PositivePart,
  /// f(u) = arctan(u)
  Arctan,
  /// Piecewise-linear interpolation of user knots, flat outside them.
  Tabulated,
};

std::string_view penalty_kind_name(PenaltyKind kind) noexcept;
PenaltyKind parse_penalty_kind(std::string_view name);

struct PenaltyKnot {
  double u;
  double f;
};

/// Penalized objective PL(u) = loss(u) + lambda_n * f(u), lambda_n = c * n^(-xi).
/// Candidates are restricted to u <= gamma_n, the (1 - eta1) empirical quantile.
struct PenaltyConfig {
  double c = 0.0;
  double xi = 0.4;
  PenaltyKind kind = PenaltyKind::PositivePart;
  /// Shift of the positive-part penalty; unset means the sample minimum x.
  std::optional<double> shift;
  double eta1 = 0.05;
  std::vector<PenaltyKnot> table;

  /// Throws Error(InvalidConfig) unless c >= 0, 0 < xi < 1/2, 0 < eta1 < 1
  /// and (for tabulated penalties) the knots are non-negative, strictly
  /// increasing in u and non-decreasing in f.
  void validate() const;

  double lambda(std::size_t n) const;

  /// f(u); `default_shift` is used when `shift` is unset.
  double f(double u, double default_shift) const;
};

}  // namespace linthresh
