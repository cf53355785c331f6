#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "linthresh/error.hpp"
#include "linthresh/estimator.hpp"
#include "linthresh/io/csv.hpp"
#include "linthresh/io/dataset.hpp"
#include "linthresh/io/results.hpp"
#include "linthresh/io/scenario_config.hpp"
#include "linthresh/io/svg.hpp"
#include "linthresh/profile.hpp"
#include "linthresh/simulation/scenario.hpp"

namespace linthresh::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kDefaultOutputDir = "linthresh-out";

// Bundled-dataset recipe, used whenever --input is omitted.
constexpr double kRecipeC = 250.0;
constexpr double kRecipeEta1 = 0.02;
constexpr double kRecipeShift = 0.0;
constexpr double kDefaultC = 0.01;
constexpr double kDefaultEta1 = 0.05;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

std::string num(double v, int digits = 6) {
  if (!std::isfinite(v)) return io::format_double(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

struct DataFlags {
  std::string input;
  std::string x = "Wind";
  std::string y = "Ozone";
  std::vector<std::string> na{"NA"};
  std::string data_dir = LINTHRESH_DEFAULT_DATA_DIR;
};

struct PenaltyFlags {
  double c = kDefaultC;
  double xi = 0.4;
  double eta1 = kDefaultEta1;
  std::string penalty = "positive-part";
  double shift = 0.0;
  std::vector<std::string> knots;
  CLI::Option* c_opt = nullptr;
  CLI::Option* eta1_opt = nullptr;
  CLI::Option* shift_opt = nullptr;
};

struct OutputFlags {
  std::string dir = kDefaultOutputDir;
  bool no_svg = false;
};

void add_data_flags(CLI::App* cmd, DataFlags& f) {
  cmd->add_option("-i,--input", f.input,
                  "CSV file with a header row. Omitted: the bundled airquality fixture "
                  "(111 complete cases) with the airquality recipe defaults");
  cmd->add_option("--x", f.x, "Covariate column")->capture_default_str();
  cmd->add_option("--y", f.y, "Response column")->capture_default_str();
  cmd->add_option("--na", f.na, "Cell values treated as missing (repeatable)")->capture_default_str();
  cmd->add_option("--data-dir", f.data_dir, "Directory holding the bundled fixtures")->capture_default_str();
}

void add_penalty_flags(CLI::App* cmd, PenaltyFlags& f, bool with_c) {
  if (with_c) {
    f.c_opt = cmd->add_option("-c,--c", f.c,
                              "Penalty constant; lambda_n = c n^(-xi). Default 0.01, or 250 with the "
                              "bundled fixture");
  }
  cmd->add_option("--xi", f.xi, "Penalty rate exponent, in (0, 1/2)")->capture_default_str();
  f.eta1_opt = cmd->add_option("--eta1", f.eta1,
                               "Upper tail mass excluded from the search; candidates satisfy "
                               "u <= x_(ceil((1-eta1) n)). Default 0.05, or 0.02 with the bundled fixture");
  cmd->add_option("--penalty", f.penalty, "Penalty function: positive-part (alias identity), arctan, tabulated")
      ->capture_default_str();
  f.shift_opt = cmd->add_option("--shift", f.shift,
                                "positive-part penalty is max(u - shift, 0). Default: the sample minimum, "
                                "or 0 with the bundled fixture");
  cmd->add_option("--knot", f.knots, "Tabulated penalty knot as u:f (repeatable, increasing u)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("-o,--output-dir", f.dir, "Directory for emitted files")
      ->envname("LINTHRESH_OUTPUT_DIR")
      ->capture_default_str();
  cmd->add_flag("--no-svg", f.no_svg, "Skip the SVG companions");
}

bool bundled(const DataFlags& d) { return d.input.empty(); }

io::DatasetSpec dataset_spec(const DataFlags& d) {
  if (bundled(d)) return {fs::path(d.data_dir) / "airquality.csv", d.x, d.y, d.na};
  return {d.input, d.x, d.y, d.na};
}

PenaltyConfig penalty_config(const PenaltyFlags& f, const DataFlags& d) {
  PenaltyConfig cfg;
  const bool recipe = bundled(d);
  cfg.c = f.c_opt && f.c_opt->count() ? f.c : (recipe ? kRecipeC : kDefaultC);
  cfg.xi = f.xi;
  cfg.eta1 = f.eta1_opt->count() ? f.eta1 : (recipe ? kRecipeEta1 : kDefaultEta1);
  cfg.kind = parse_penalty_kind(f.penalty);
  if (f.shift_opt->count())
    cfg.shift = f.shift;
  else if (recipe)
    cfg.shift = kRecipeShift;
  for (const std::string& k : f.knots) {
    const auto colon = k.find(':');
    const auto u = colon == std::string::npos ? std::nullopt : io::parse_double(k.substr(0, colon));
    const auto v = colon == std::string::npos ? std::nullopt : io::parse_double(k.substr(colon + 1));
    if (!u || !v) invalid("--knot expects u:f, got '" + k + "'");
    cfg.table.push_back({*u, *v});
  }
  if (cfg.kind == PenaltyKind::Tabulated && cfg.table.empty()) invalid("tabulated penalty needs --knot values");
  cfg.validate();
  return cfg;
}

fs::path prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

std::string describe_penalty(const PenaltyConfig& cfg, const Sample& sample) {
  std::string s(penalty_kind_name(cfg.kind));
  if (cfg.kind == PenaltyKind::PositivePart) s += " (shift " + num(cfg.shift.value_or(sample.min_x())) + ")";
  if (cfg.kind == PenaltyKind::Tabulated) s += " (" + std::to_string(cfg.table.size()) + " knots)";
  return s;
}

/// "airquality", "start:step:stop" or a comma list.
std::vector<double> parse_c_grid(const std::string& spec) {
  if (spec == "airquality") return airquality_c_grid();
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
      const auto v = io::parse_double(tok);
      if (!v || !std::isfinite(*v)) invalid("bad --c-grid range '" + spec + "'");
      parts.push_back(*v);
    }
    if (parts.size() != 3 || parts[1] <= 0.0 || parts[2] < parts[0])
      invalid("--c-grid range must be start:step:stop with step > 0 and stop >= start");
    const double span = (parts[2] - parts[0]) / parts[1];
    if (span > 1e7) invalid("--c-grid range has too many points");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(parts[0] + double(i) * parts[1]);
    return grid;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto v = io::parse_double(tok);
    if (!v) invalid("bad --c-grid value '" + tok + "'");
    grid.push_back(*v);
  }
  return grid;
}

// ---------------------------------------------------------------- estimate

void print_estimate(std::ostream& out, const io::DatasetSpec& spec, const io::Dataset& data,
                    const PenaltyConfig& cfg, const ThresholdEstimate& est) {
  constexpr std::size_t w = 14;
  out << pad("input", w) << spec.path.string() << " (x=" << spec.x_column << ", y=" << spec.y_column << ")\n"
      << pad("rows", w) << data.sample.size() << " used, " << data.rows_dropped << " dropped\n"
      << pad("penalty", w) << describe_penalty(cfg, data.sample) << "\n"
      << pad("c", w) << num(cfg.c) << "\n"
      << pad("xi", w) << num(cfg.xi) << "\n"
      << pad("eta1", w) << num(cfg.eta1) << "\n"
      << pad("lambda_n", w) << num(est.lambda_n) << "\n"
      << pad("gamma_n", w) << num(est.gamma_n) << "\n"
      << pad("candidates", w) << est.candidate_count << "\n"
      << pad("u_hat", w) << num(est.u_hat, 10) << "\n"
      << pad("PL(u_hat)", w) << num(est.penalized_min) << "\n"
      << pad("alpha(u_hat)", w) << num(est.fit_at_u_hat.alpha) << "\n"
      << pad("beta(u_hat)", w) << num(est.fit_at_u_hat.beta) << "\n"
      << pad("n(u_hat)", w) << est.fit_at_u_hat.n_used << "\n";
  if (!est.refit) return;
  const Refit& r = *est.refit;
  out << "\nrefit on x >= " << num(r.threshold, 10) << " (psi " << num(est.psi) << ", " << r.fit.n_used
      << " points, sigma2 " << num(r.sigma2) << ")\n";
  constexpr std::size_t cw = 13;
  out << pad("", 8) << lpad("estimate", cw) << lpad("std.error", cw) << lpad("z", cw) << lpad("p(|Z|>|z|)", cw)
      << "\n";
  auto row = [&](const char* name, double est_v, double se, double z, double p) {
    out << pad(name, 8) << lpad(num(est_v), cw) << lpad(num(se), cw) << lpad(num(z), cw) << lpad(num(p), cw)
        << "\n";
  };
  row("alpha", r.fit.alpha, r.se_alpha, r.z_alpha, r.p_alpha);
  row("beta", r.fit.beta, r.se_beta, r.z_beta, r.p_beta);
}

int cmd_estimate(const DataFlags& d, const PenaltyFlags& p, double psi, const OutputFlags& o, std::ostream& out) {
  const io::DatasetSpec spec = dataset_spec(d);
  const io::Dataset data = io::read_csv(spec);
  const PenaltyConfig cfg = penalty_config(p, d);
  if (!(psi >= 0.0) || !std::isfinite(psi)) invalid("--psi must be finite and >= 0");
  const ThresholdEstimate est = estimate(data.sample, cfg, psi);
  print_estimate(out, spec, data, cfg, est);
  const fs::path dir = prepare_dir(o.dir);
  io::write_json(io::to_json(est), dir / "estimate.json");
  return 0;
}

// ----------------------------------------------------------------- profile

int cmd_profile(const DataFlags& d, const PenaltyFlags& p, const OutputFlags& o, std::ostream& out) {
  const io::Dataset data = io::read_csv(dataset_spec(d));
  const PenaltyConfig cfg = penalty_config(p, d);
  const LossProfile prof = loss_profile(data.sample, cfg);
  const ThresholdEstimate est = estimate_threshold(prof);
  const fs::path dir = prepare_dir(o.dir);
  io::write_profile(prof, dir / "profile.csv");
  if (!o.no_svg) io::write_svg(io::profile_chart(prof, est.u_hat), dir / "profile.svg");
  out << "candidates " << prof.entries.size() << " (" << prof.excluded_degenerate << " degenerate skipped), u_hat "
      << num(est.u_hat, 10) << "\nwrote " << (dir / "profile.csv").string() << "\n";
  return 0;
}

// ------------------------------------------------------------------- sweep

SweepResult run_sweep(const Sample& sample, const PenaltyConfig& cfg, const std::vector<double>& grid,
                      const fs::path& dir, bool svg) {
  const SweepResult sweep = c_sweep(sample, cfg, grid);
  io::write_sweep(sweep, dir / "sweep.csv");
  io::write_plateaus(sweep, dir / "plateaus.csv");
  if (svg) io::write_svg(io::sweep_chart(sweep), dir / "sweep.svg");
  return sweep;
}

void print_plateaus(std::ostream& out, const SweepResult& sweep) {
  out << lpad("u_hat", 12) << lpad("c_first", 14) << lpad("c_last", 14) << lpad("grid_points", 13) << "\n";
  for (const Plateau& pl : sweep.plateaus) {
    out << lpad(num(pl.u_hat, 10), 12) << lpad(num(pl.c_first, 10), 14) << lpad(num(pl.c_last, 10), 14)
        << lpad(std::to_string(pl.grid_points), 13) << "\n";
  }
}

int cmd_sweep(const DataFlags& d, const PenaltyFlags& p, const std::string& grid_spec, const OutputFlags& o,
              std::ostream& out) {
  const io::Dataset data = io::read_csv(dataset_spec(d));
  const PenaltyConfig cfg = penalty_config(p, d);
  const std::vector<double> grid = parse_c_grid(grid_spec);
  const fs::path dir = prepare_dir(o.dir);
  const SweepResult sweep = run_sweep(data.sample, cfg, grid, dir, !o.no_svg);
  print_plateaus(out, sweep);
  out << "wrote " << (dir / "sweep.csv").string() << "\n";
  return 0;
}

// ---------------------------------------------------------------- simulate

struct SimFlags {
  std::string config;
  unsigned threads = 0;
  std::size_t nrep = 0;
  std::uint64_t seed = 0;
  bool full_scale = false;
  CLI::Option* nrep_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

constexpr std::size_t kFullScaleNrep = 1000;

void apply_overrides(std::vector<sim::Scenario>& scenarios, const SimFlags& f) {
  for (auto& s : scenarios) {
    if (f.full_scale) s.nrep = kFullScaleNrep;
    if (f.nrep_opt && f.nrep_opt->count()) s.nrep = f.nrep;
    if (f.seed_opt && f.seed_opt->count()) s.base_seed = f.seed;
    s.validate();
  }
}

/// EMAE against n, one series per setting of the remaining parameters.
io::SvgChart emae_n_chart(const std::vector<sim::ScenarioResult>& rows) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
  std::map<std::tuple<double, double, double, double>, std::vector<std::pair<double, double>>> groups;
  for (const auto& r : rows) {
    const auto& s = r.scenario;
    groups[{s.u0, s.delta, s.sigma, s.penalty.c}].emplace_back(double(s.n), r.emae);
  }
  io::SvgChart chart{.title = "EMAE against sample size", .x_label = "n", .y_label = "EMAE", .log_x = true};
  std::size_t i = 0;
  for (auto& [key, pts] : groups) {
    std::sort(pts.begin(), pts.end());
    const auto [u0, delta, sigma, c] = key;
    chart.series.push_back({"u0=" + num(u0) + " delta=" + num(delta) + " sigma=" + num(sigma) + " c=" + num(c),
                            pts, false, palette[i++ % std::size(palette)]});
  }
  return chart;
}

void print_scenarios(std::ostream& out, const std::vector<sim::ScenarioResult>& rows) {
  out << lpad("u0", 6) << lpad("delta", 7) << lpad("sigma", 8) << lpad("n", 7) << lpad("c", 10)
      << lpad("nrep", 6) << lpad("failed", 7) << lpad("EMAE", 12) << lpad("median u_hat", 14) << "\n";
  for (const auto& r : rows) {
    const auto& s = r.scenario;
    out << lpad(num(s.u0), 6) << lpad(num(s.delta), 7) << lpad(num(s.sigma), 8) << lpad(std::to_string(s.n), 7)
        << lpad(num(s.penalty.c), 10) << lpad(std::to_string(s.nrep), 6) << lpad(std::to_string(r.failures), 7)
        << lpad(num(r.emae), 12) << lpad(num(r.u_hat.median), 14) << "\n";
  }
}

int cmd_simulate(const SimFlags& f, const OutputFlags& o, std::ostream& out) {
  std::vector<sim::Scenario> scenarios = io::read_scenario_config(f.config);
  apply_overrides(scenarios, f);
  const std::vector<sim::ScenarioResult> rows = sim::grid_runner(scenarios, f.threads);
  const fs::path dir = prepare_dir(o.dir);
  io::write_scenario_table(rows, dir / "scenarios.csv");
  io::write_replications(rows, dir / "replications.csv");
  if (!o.no_svg && !rows.empty()) io::write_svg(emae_n_chart(rows), dir / "emae_n.svg");
  print_scenarios(out, rows);
  out << "wrote " << (dir / "scenarios.csv").string() << "\n";
  return 0;
}

// ------------------------------------------------------------------ report

std::vector<sim::ScenarioResult> run_c_family(sim::Scenario base, const std::vector<double>& cs, unsigned threads) {
  base.validate();
  return sim::run_c_grid(base, cs, threads);
}

int cmd_report(const DataFlags& d, const SimFlags& f, const OutputFlags& o, std::ostream& out) {
  const fs::path root = prepare_dir(o.dir);

  // Real data: bundled fixture, recipe defaults.
  const fs::path aq = prepare_dir(root / "airquality");
  const io::DatasetSpec spec{fs::path(d.data_dir) / "airquality.csv", "Wind", "Ozone", {"NA"}};
  const io::Dataset data = io::read_csv(spec);
  PenaltyConfig cfg{.c = kRecipeC, .xi = 0.4, .shift = kRecipeShift, .eta1 = kRecipeEta1};
  const ThresholdEstimate est = estimate(data.sample, cfg, 0.0);
  {
    std::ofstream txt(aq / "estimate.txt");
    print_estimate(txt, spec, data, cfg, est);
  }
  io::write_json(io::to_json(est), aq / "estimate.json");
  const ThresholdEstimate shifted = estimate(data.sample, cfg, 1.0);
  io::write_json(io::to_json(shifted), aq / "estimate_psi1.json");
  const LossProfile prof = loss_profile(data.sample, cfg);
  io::write_profile(prof, aq / "profile.csv");
  if (!o.no_svg) io::write_svg(io::profile_chart(prof, est.u_hat), aq / "profile.svg");
  const SweepResult sweep = run_sweep(data.sample, cfg, airquality_c_grid(), aq, !o.no_svg);
  out << "airquality: u_hat " << num(est.u_hat) << " at c = " << num(cfg.c) << "; sweep plateaus\n";
  print_plateaus(out, sweep);

  // Simulation: EMAE curves for the standard scenario.
  const fs::path simdir = prepare_dir(root / "simulation");
  sim::Scenario base;
  std::vector<sim::Scenario> tmp{base};
  apply_overrides(tmp, f);
  base = tmp.front();

  std::vector<sim::ScenarioResult> by_n;
  for (std::size_t n : {200u, 500u, 1000u, 2000u}) {
    sim::Scenario s = base;
    s.n = n;
    for (auto& r : run_c_family(s, {0.0, 0.01}, f.threads)) by_n.push_back(std::move(r));
  }
  io::write_scenario_table(by_n, simdir / "emae_n.csv");
  if (!o.no_svg) io::write_svg(emae_n_chart(by_n), simdir / "emae_n.svg");

  const std::vector<double> cgrid = sim::emae_c_grid();
  const std::vector<sim::ScenarioResult> by_c = run_c_family(base, cgrid, f.threads);
  io::write_scenario_table(by_c, simdir / "emae_c.csv");
  if (!o.no_svg) {
    io::SvgChart chart{.title = "EMAE against c (n = 1000)", .x_label = "c", .y_label = "EMAE", .log_x = true};
    io::SvgSeries series{.label = "EMAE"};
    for (const auto& r : by_c) series.points.emplace_back(r.scenario.penalty.c, r.emae);
    chart.series.push_back(series);
    io::write_svg(chart, simdir / "emae_c.svg");
  }

  std::vector<sim::Scenario> delta_grid;
  for (double u0 : {0.5, 0.75}) {
    for (double delta : {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5}) {
      sim::Scenario s = base;
      s.u0 = u0;
      s.delta = delta;
      delta_grid.push_back(s);
    }
  }
  const std::vector<sim::ScenarioResult> by_delta = sim::grid_runner(delta_grid, f.threads);
  io::write_scenario_table(by_delta, simdir / "emae_delta.csv");

  out << "\nsimulation (nrep " << base.nrep << ")\n";
  print_scenarios(out, by_n);
  out << "\n";
  print_scenarios(out, by_delta);
  out << "wrote " << root.string() << "\n";
  return 0;
}

constexpr const char* kEstimateFooter = R"(
Prints the selected threshold, the suffix fit at it and the refit on
x >= u_hat + psi with standard errors, z statistics and two-sided normal
p-values. Writes <output-dir>/estimate.json:
  u_hat, n, gamma_n, lambda_n, candidates, penalized_min,
  fit_at_u_hat {alpha, beta, n_used, rss, loss},
  psi, refit {threshold, fit, sigma2, covariance, se_alpha, se_beta,
              z_alpha, z_beta, p_alpha, p_beta} or null)";

constexpr const char* kProfileFooter = R"(
Writes <output-dir>/profile.csv with columns
  u,n_suffix,alpha,beta,rss,loss,penalty,penalized,gamma_n,lambda_n
(one row per candidate, ascending u) and profile.svg.)";

constexpr const char* kSweepFooter = R"(
--c-grid accepts "airquality" (0:0.001:10, then steps 0.01 to 150 and 0.1
to 500), "start:step:stop", or a comma list. Writes
  sweep.csv     c,u_hat
  plateaus.csv  u_hat,c_first,c_last,grid_points
and sweep.svg.)";

constexpr const char* kSimulateFooter = R"(
Config format: [defaults] and [scenario] sections of key = value lines.
Keys: u0, delta, sigma, n, c, xi, eta1, shift, penalty, model, nrep, seed.
Comma lists on u0, delta, sigma, n, c expand to a cartesian product.
Writes
  scenarios.csv     u0,delta,sigma,n,c,xi,eta1,penalty,model,nrep,seed,
                    successes,failures,emae, then min,q1,median,q3,max of
                    u_hat, alpha and beta
  replications.csv  scenario,u0,delta,sigma,n,c,rep,status,u_hat,alpha,beta
and emae_n.svg.)";

constexpr const char* kReportFooter = R"(
Writes <output-dir>/airquality/ (estimate.txt, estimate.json,
estimate_psi1.json, profile.csv, sweep.csv, plateaus.csv and SVGs) and
<output-dir>/simulation/ (emae_n.csv, emae_c.csv, emae_delta.csv and SVGs)
using the scenario table layout documented under simulate. Desk scale runs
200 replications per scenario; --full-scale runs 1000.)";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold of linearity estimation by penalized suffix least squares", "linthresh"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "linthresh 1.0.0");

  // One flag set per subcommand so "was this flag given" checks stay local.
  DataFlags data[4];
  PenaltyFlags penalty[3];
  OutputFlags output[5];
  SimFlags simf[2];
  double psi = 0.0;
  std::string c_grid = "airquality";

  CLI::App* estimate_cmd = app.add_subcommand("estimate", "Estimate the threshold and refit beyond it");
  add_data_flags(estimate_cmd, data[0]);
  add_penalty_flags(estimate_cmd, penalty[0], true);
  estimate_cmd->add_option("--psi", psi, "Refit offset: the final fit uses x >= u_hat + psi")->capture_default_str();
  add_output_flags(estimate_cmd, output[0]);
  estimate_cmd->footer(kEstimateFooter);

  CLI::App* profile_cmd = app.add_subcommand("profile", "Write the loss and penalized loss at every candidate");
  add_data_flags(profile_cmd, data[1]);
  add_penalty_flags(profile_cmd, penalty[1], true);
  add_output_flags(profile_cmd, output[1]);
  profile_cmd->footer(kProfileFooter);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Trace u_hat as the penalty constant varies");
  add_data_flags(sweep_cmd, data[2]);
  add_penalty_flags(sweep_cmd, penalty[2], false);
  sweep_cmd->add_option("--c-grid", c_grid, "Penalty constants to visit")->capture_default_str();
  add_output_flags(sweep_cmd, output[2]);
  sweep_cmd->footer(kSweepFooter);

  auto add_sim_flags = [](CLI::App* cmd, SimFlags& simf) {
    cmd->add_option("--threads", simf.threads, "Worker threads (0 = available parallelism)")->capture_default_str();
    simf.nrep_opt = cmd->add_option("--nrep", simf.nrep, "Override the replication count of every scenario");
    simf.seed_opt = cmd->add_option("--seed", simf.seed, "Override the base seed of every scenario");
    cmd->add_flag("--full-scale", simf.full_scale, "Use 1000 replications per scenario");
  };

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Run a Monte Carlo scenario grid");
  simulate_cmd->add_option("--config", simf[0].config, "Scenario grid file")->required()->check(CLI::ExistingFile);
  add_sim_flags(simulate_cmd, simf[0]);
  add_output_flags(simulate_cmd, output[3]);
  simulate_cmd->footer(kSimulateFooter);

  CLI::App* report_cmd = app.add_subcommand("report", "Regenerate the bundled reproduction suite");
  report_cmd->add_option("--data-dir", data[3].data_dir, "Directory holding the bundled fixtures")
      ->capture_default_str();
  add_sim_flags(report_cmd, simf[1]);
  add_output_flags(report_cmd, output[4]);
  report_cmd->footer(kReportFooter);

  std::vector<const char*> argv{"linthresh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
  }

  try {
    if (*estimate_cmd) return cmd_estimate(data[0], penalty[0], psi, output[0], out);
    if (*profile_cmd) return cmd_profile(data[1], penalty[1], output[1], out);
    if (*sweep_cmd) return cmd_sweep(data[2], penalty[2], c_grid, output[2], out);
    if (*simulate_cmd) return cmd_simulate(simf[0], output[3], out);
    if (*report_cmd) return cmd_report(data[3], simf[1], output[4], out);
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "error[INTERNAL]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace linthresh::cli
