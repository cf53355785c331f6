#include "linthresh/simulation/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "linthresh/estimator.hpp"
#include "linthresh/profile.hpp"
#include "linthresh/simulation/regression_family.hpp"
#include "linthresh/simulation/rng.hpp"

namespace linthresh::sim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

double type7_quantile(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

ScenarioResult aggregate(const Scenario& scenario, std::vector<Replication> reps) {
  ScenarioResult out;
  out.scenario = scenario;
  std::vector<double> u, a, b;
  double abs_err = 0.0;
  for (const Replication& r : reps) {
    if (!r.estimate) {
      ++out.failures;
      continue;
    }
    abs_err += std::abs(r.estimate->u_hat - scenario.u0);
    u.push_back(r.estimate->u_hat);
    a.push_back(r.estimate->alpha);
    b.push_back(r.estimate->beta);
  }
  out.emae = u.empty() ? kNaN : abs_err / static_cast<double>(u.size());
  out.u_hat = five_number_summary(std::move(u));
  out.alpha = five_number_summary(std::move(a));
  out.beta = five_number_summary(std::move(b));
  out.replications = std::move(reps);
  return out;
}

ReplicationEstimate from_entry(const ProfileEntry& e) { return {e.u, e.fit.alpha, e.fit.beta}; }

}  // namespace

double ReplicationRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string_view response_model_name(ResponseModel model) noexcept {
  return model == ResponseModel::Linear ? "linear" : "threshold";
}

ResponseModel parse_response_model(std::string_view name) {
  if (name == "threshold") return ResponseModel::Threshold;
  if (name == "linear") return ResponseModel::Linear;
  invalid("unknown response model '" + std::string(name) + "'");
}

void Scenario::validate() const {
  if (!(u0 > 0.0 && u0 < 1.0)) invalid("scenario u0 must lie in (0, 1)");
  if (!std::isfinite(delta)) invalid("scenario delta must be finite");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) invalid("scenario sigma must be finite and >= 0");
  if (n < 10) invalid("scenario n must be at least 10");
  if (nrep < 1) invalid("scenario nrep must be at least 1");
  penalty.validate();
}

double regression_value(const Scenario& scenario, double x) {
  if (scenario.model == ResponseModel::Linear) {
    return linear_intercept(scenario.u0, scenario.delta) + linear_slope(scenario.u0, scenario.delta) * x;
  }
  return r_threshold(x, scenario.u0, scenario.delta);
}

Sample generate_sample(const Scenario& scenario, std::uint64_t rep_index) {
  scenario.validate();
  ReplicationRng rng(scenario.base_seed, rep_index);
  std::vector<Point> points(scenario.n);
  for (Point& p : points) {
    p.x = rng.uniform();
    // The noise draw happens even when sigma = 0 so streams stay aligned.
    const double eps = rng.normal();
    p.y = regression_value(scenario, p.x) + scenario.sigma * eps;
  }
  return Sample(std::move(points));
}

FiveNumberSummary five_number_summary(std::vector<double> values) {
  if (values.empty()) return {kNaN, kNaN, kNaN, kNaN, kNaN};
  std::sort(values.begin(), values.end());
  return {values.front(), type7_quantile(values, 0.25), type7_quantile(values, 0.5),
          type7_quantile(values, 0.75), values.back()};
}

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

ScenarioResult run_scenario(const Scenario& scenario, unsigned threads) {
  scenario.validate();
  std::vector<Replication> reps(scenario.nrep);
  parallel_for(scenario.nrep, threads, [&](std::size_t i) {
    const Sample sample = generate_sample(scenario, i);
    try {
      const ThresholdEstimate est = estimate_threshold(loss_profile(sample, scenario.penalty));
      reps[i].estimate = ReplicationEstimate{est.u_hat, est.fit_at_u_hat.alpha, est.fit_at_u_hat.beta};
    } catch (const Error& e) {
      reps[i].error = e.code();
    }
  });
  return aggregate(scenario, std::move(reps));
}

std::vector<ScenarioResult> run_c_grid(const Scenario& scenario, std::span<const double> c_grid,
                                       unsigned threads) {
  scenario.validate();
  for (double c : c_grid) {
    if (!std::isfinite(c) || c < 0.0) invalid("c grid values must be finite and >= 0");
  }
  const std::size_t nc = c_grid.size();
  // reps[c * nrep + i]
  std::vector<Replication> reps(nc * scenario.nrep);
  const double rate = std::pow(static_cast<double>(scenario.n), -scenario.penalty.xi);

  parallel_for(scenario.nrep, threads, [&](std::size_t i) {
    const Sample sample = generate_sample(scenario, i);
    PenaltyConfig base = scenario.penalty;
    base.c = 0.0;
    try {
      const LossProfile profile = loss_profile(sample, base);
      for (std::size_t j = 0; j < nc; ++j) {
        const ProfileEntry& e = profile.entries[argmin_penalized(profile, c_grid[j] * rate)];
        reps[j * scenario.nrep + i].estimate = from_entry(e);
      }
    } catch (const Error& e) {
      for (std::size_t j = 0; j < nc; ++j) reps[j * scenario.nrep + i].error = e.code();
    }
  });

  std::vector<ScenarioResult> out;
  out.reserve(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    Scenario s = scenario;
    s.penalty.c = c_grid[j];
    auto first = reps.begin() + static_cast<std::ptrdiff_t>(j * scenario.nrep);
    out.push_back(aggregate(s, std::vector<Replication>(first, first + static_cast<std::ptrdiff_t>(scenario.nrep))));
  }
  return out;
}

std::vector<ScenarioResult> grid_runner(std::span<const Scenario> scenarios, unsigned threads) {
  std::vector<ScenarioResult> out;
  out.reserve(scenarios.size());
  for (const Scenario& s : scenarios) out.push_back(run_scenario(s, threads));
  return out;
}

std::vector<double> emae_c_grid() {
  std::vector<double> grid{0.0};
  for (int k = 10; k >= 0; --k) {
    const double unit = std::pow(10.0, -k);
    grid.push_back(0.5 * unit);
    grid.push_back(unit);
  }
  return grid;
}

}  // namespace linthresh::sim
