#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linthresh/error.hpp"
#include "linthresh/penalty.hpp"
#include "linthresh/sample.hpp"

namespace linthresh::sim {

enum class ResponseModel {
  /// Y = r_threshold(X; u0, delta) + noise
  Threshold,
  /// The linear piece of r_threshold extended over all of [0, 1].
  Linear,
};

std::string_view response_model_name(ResponseModel model) noexcept;
ResponseModel parse_response_model(std::string_view name);

/// One Monte Carlo cell: X ~ U(0, 1), Y = r(X) + N(0, sigma^2), nrep draws.
struct Scenario {
  double u0 = 0.5;
  double delta = -1.0;
  double sigma = 0.01;
  std::size_t n = 1000;
  PenaltyConfig penalty{.c = 0.01, .xi = 0.4, .shift = 0.0, .eta1 = 0.05};
  std::size_t nrep = 200;
  std::uint64_t base_seed = 20240101;
  ResponseModel model = ResponseModel::Threshold;

  /// Throws Error(InvalidConfig). Requires u0 in (0, 1), sigma >= 0 (0 is the
  /// noiseless case), n >= 10, nrep >= 1 and a valid penalty.
  void validate() const;
};

double regression_value(const Scenario& scenario, double x);

/// Deterministic in (scenario.base_seed, rep_index) and the model parameters.
Sample generate_sample(const Scenario& scenario, std::uint64_t rep_index);

struct ReplicationEstimate {
  double u_hat = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct Replication {
  std::optional<ReplicationEstimate> estimate;
  std::optional<ErrorCode> error;
};

/// Type-7 (linear interpolation) quartiles; NaN when empty.
struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

FiveNumberSummary five_number_summary(std::vector<double> values);

struct ScenarioResult {
  Scenario scenario;
  /// Mean |u_hat - u0| over successful replications (NaN if none succeeded).
  double emae = 0.0;
  std::vector<Replication> replications;
  FiveNumberSummary u_hat;
  FiveNumberSummary alpha;
  FiveNumberSummary beta;
  std::size_t failures = 0;

  std::size_t successes() const noexcept { return replications.size() - failures; }
};

/// Runs nrep replications on `threads` workers (0 = hardware concurrency).
/// Output does not depend on the thread count.
ScenarioResult run_scenario(const Scenario& scenario, unsigned threads = 0);

/// Same samples, several penalty constants: one result per c, each equal to
/// run_scenario with scenario.penalty.c replaced by that c.
std::vector<ScenarioResult> run_c_grid(const Scenario& scenario, std::span<const double> c_grid,
                                       unsigned threads = 0);

/// One row per scenario, in input order.
std::vector<ScenarioResult> grid_runner(std::span<const Scenario> scenarios, unsigned threads = 0);

/// 0 and {1, 0.5} x 10^-k for k = 0..10, ascending.
std::vector<double> emae_c_grid();

/// Invokes fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn);

unsigned resolve_threads(unsigned requested) noexcept;

}  // namespace linthresh::sim

#include "linthresh/simulation/parallel_for.ipp"
