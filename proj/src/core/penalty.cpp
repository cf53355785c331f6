#include "linthresh/penalty.hpp"

#include <algorithm>
#include <cmath>

#include "linthresh/error.hpp"

namespace linthresh {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

}  // namespace

std::string_view penalty_kind_name(PenaltyKind kind) noexcept {
  switch (kind) {
    case PenaltyKind::PositivePart: return "positive-part";
    case PenaltyKind::Arctan: return "arctan";
    case PenaltyKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

PenaltyKind parse_penalty_kind(std::string_view name) {
  if (name == "positive-part" || name == "identity") return PenaltyKind::PositivePart;
  if (name == "arctan") return PenaltyKind::Arctan;
  if (name == "tabulated") return PenaltyKind::Tabulated;
  invalid("unknown penalty function '" + std::string(name) + "'");
}

void PenaltyConfig::validate() const {
  if (!std::isfinite(c) || c < 0.0) invalid("penalty constant c must be finite and >= 0");
  if (!(xi > 0.0 && xi < 0.5)) invalid("penalty exponent xi must lie in (0, 1/2)");
  if (!(eta1 > 0.0 && eta1 < 1.0)) invalid("quantile tail mass eta1 must lie in (0, 1)");
  if (shift && !std::isfinite(*shift)) invalid("penalty shift must be finite");
  if (kind == PenaltyKind::Tabulated) {
    if (table.empty()) invalid("tabulated penalty needs at least one knot");
    for (std::size_t i = 0; i < table.size(); ++i) {
      const PenaltyKnot& k = table[i];
      if (!std::isfinite(k.u) || !std::isfinite(k.f)) invalid("tabulated penalty knots must be finite");
      if (k.f < 0.0) invalid("tabulated penalty must be non-negative");
      if (i > 0 && !(k.u > table[i - 1].u)) invalid("tabulated penalty knots must increase in u");
      if (i > 0 && k.f < table[i - 1].f) invalid("tabulated penalty must be non-decreasing");
    }
  }
  // arctan is negative for u < 0; loss_profile rejects it on such candidates.
}

double PenaltyConfig::lambda(std::size_t n) const {
  return c * std::pow(static_cast<double>(n), -xi);
}

double PenaltyConfig::f(double u, double default_shift) const {
  switch (kind) {
    case PenaltyKind::PositivePart:
      return std::max(u - shift.value_or(default_shift), 0.0);
    case PenaltyKind::Arctan:
      return std::atan(u);
    case PenaltyKind::Tabulated: {
      if (u <= table.front().u) return table.front().f;
      if (u >= table.back().u) return table.back().f;
      auto hi = std::upper_bound(table.begin(), table.end(), u,
                                 [](double v, const PenaltyKnot& k) { return v < k.u; });
      auto lo = hi - 1;
      const double t = (u - lo->u) / (hi->u - lo->u);
      return lo->f + t * (hi->f - lo->f);
    }
  }
  return 0.0;
}

}  // namespace linthresh
