#include "linthresh/io/results.hpp"

#include <fstream>

#include "linthresh/error.hpp"
#include "linthresh/io/csv.hpp"

namespace linthresh::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, path.string() + ": cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::Io, path.string() + ": write failed");
}

std::string fmt(double v) { return format_double(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

double number(const std::string& cell, std::size_t row, const std::string& column,
              const std::filesystem::path& path) {
  const auto v = parse_double(cell);
  if (!v) {
    throw Error(ErrorCode::ParseError, path.string() + ": row " + std::to_string(row) + ", column '" +
                                           column + "': cannot parse '" + cell + "'");
  }
  return *v;
}

nlohmann::ordered_json fit_json(const LinearFit& f) {
  return {{"alpha", f.alpha}, {"beta", f.beta}, {"n_used", f.n_used}, {"rss", f.rss},
          {"mean_x", f.mean_x}, {"mean_y", f.mean_y}};
}

}  // namespace

const std::vector<std::string>& profile_header() {
  static const std::vector<std::string> h{"u",   "n_suffix", "alpha",     "beta",    "rss",
                                          "loss", "penalty", "penalized", "gamma_n", "lambda_n"};
  return h;
}

const std::vector<std::string>& scenario_table_header() {
  static const std::vector<std::string> h{
      "u0",         "delta",     "sigma",       "n",         "c",         "xi",
      "eta1",       "penalty",   "model",       "nrep",      "seed",      "successes",
      "failures",   "emae",      "u_hat_min",   "u_hat_q1",  "u_hat_median", "u_hat_q3",
      "u_hat_max",  "alpha_min", "alpha_q1",    "alpha_median", "alpha_q3", "alpha_max",
      "beta_min",   "beta_q1",   "beta_median", "beta_q3",   "beta_max"};
  return h;
}

void write_profile(const LossProfile& profile, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << csv_join(profile_header()) << '\n';
  for (const ProfileEntry& e : profile.entries) {
    out << csv_join({fmt(e.u), fmt(e.n_suffix), fmt(e.fit.alpha), fmt(e.fit.beta), fmt(e.fit.rss), fmt(e.loss),
                     fmt(e.penalty), fmt(e.penalized), fmt(profile.gamma_n), fmt(profile.lambda_n)})
        << '\n';
  }
  finish(out, path);
}

LossProfile read_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, path.string() + ": cannot open for reading");
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields != profile_header()) {
    throw Error(ErrorCode::ParseError, path.string() + ": not a loss profile file (header mismatch)");
  }
  LossProfile profile;
  std::size_t row = 0;
  while (reader.next(fields)) {
    ++row;
    if (fields.size() != profile_header().size()) {
      throw Error(ErrorCode::ParseError, path.string() + ": row " + std::to_string(row) + " has " +
                                             std::to_string(fields.size()) + " fields");
    }
    auto col = [&](std::size_t i) { return number(fields[i], row, profile_header()[i], path); };
    ProfileEntry e;
    e.u = col(0);
    e.n_suffix = static_cast<std::size_t>(col(1));
    e.fit.alpha = col(2);
    e.fit.beta = col(3);
    e.fit.rss = col(4);
    e.fit.n_used = e.n_suffix;
    e.loss = col(5);
    e.penalty = col(6);
    e.penalized = col(7);
    profile.gamma_n = col(8);
    profile.lambda_n = col(9);
    profile.entries.push_back(e);
  }
  return profile;
}

void write_sweep(const SweepResult& sweep, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "c,u_hat\n";
  for (const SweepPoint& p : sweep.points) out << fmt(p.c) << ',' << fmt(p.u_hat) << '\n';
  finish(out, path);
}

void write_plateaus(const SweepResult& sweep, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "u_hat,c_first,c_last,grid_points\n";
  for (const Plateau& p : sweep.plateaus) {
    out << fmt(p.u_hat) << ',' << fmt(p.c_first) << ',' << fmt(p.c_last) << ',' << p.grid_points << '\n';
  }
  finish(out, path);
}

void write_scenario_table(std::span<const sim::ScenarioResult> results, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << csv_join(scenario_table_header()) << '\n';
  for (const sim::ScenarioResult& r : results) {
    const sim::Scenario& s = r.scenario;
    std::vector<std::string> row{fmt(s.u0),
                                 fmt(s.delta),
                                 fmt(s.sigma),
                                 fmt(s.n),
                                 fmt(s.penalty.c),
                                 fmt(s.penalty.xi),
                                 fmt(s.penalty.eta1),
                                 std::string(penalty_kind_name(s.penalty.kind)),
                                 std::string(sim::response_model_name(s.model)),
                                 fmt(s.nrep),
                                 std::to_string(s.base_seed),
                                 fmt(r.successes()),
                                 fmt(r.failures),
                                 fmt(r.emae)};
    for (const sim::FiveNumberSummary* f : {&r.u_hat, &r.alpha, &r.beta}) {
      for (double v : {f->min, f->q1, f->median, f->q3, f->max}) row.push_back(fmt(v));
    }
    out << csv_join(row) << '\n';
  }
  finish(out, path);
}

void write_replications(std::span<const sim::ScenarioResult> results, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "scenario,u0,delta,sigma,n,c,rep,status,u_hat,alpha,beta\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const sim::ScenarioResult& r = results[i];
    const sim::Scenario& s = r.scenario;
    for (std::size_t rep = 0; rep < r.replications.size(); ++rep) {
      const sim::Replication& x = r.replications[rep];
      std::vector<std::string> row{fmt(i), fmt(s.u0), fmt(s.delta), fmt(s.sigma), fmt(s.n), fmt(s.penalty.c),
                                   fmt(rep)};
      if (x.estimate) {
        row.insert(row.end(), {"ok", fmt(x.estimate->u_hat), fmt(x.estimate->alpha), fmt(x.estimate->beta)});
      } else {
        row.insert(row.end(), {std::string(error_code_name(x.error.value_or(ErrorCode::InvalidSample))), "", "", ""});
      }
      out << csv_join(row) << '\n';
    }
  }
  finish(out, path);
}

nlohmann::ordered_json to_json(const ThresholdEstimate& e) {
  nlohmann::ordered_json doc{{"u_hat", e.u_hat},
                             {"n", e.n},
                             {"gamma_n", e.gamma_n},
                             {"lambda_n", e.lambda_n},
                             {"candidates", e.candidate_count},
                             {"penalized_min", e.penalized_min},
                             {"fit_at_u_hat", fit_json(e.fit_at_u_hat)},
                             {"psi", e.psi}};
  if (e.refit) {
    const Refit& r = *e.refit;
    doc["refit"] = {{"threshold", r.threshold},
                    {"fit", fit_json(r.fit)},
                    {"sigma2", r.sigma2},
                    {"covariance", {{r.covariance.aa, r.covariance.ab}, {r.covariance.ab, r.covariance.bb}}},
                    {"se_alpha", r.se_alpha},
                    {"se_beta", r.se_beta},
                    {"z_alpha", r.z_alpha},
                    {"z_beta", r.z_beta},
                    {"p_alpha", r.p_alpha},
                    {"p_beta", r.p_beta}};
  } else {
    doc["refit"] = nullptr;
  }
  return doc;
}

void write_json(const nlohmann::ordered_json& doc, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
  finish(out, path);
}

}  // namespace linthresh::io
