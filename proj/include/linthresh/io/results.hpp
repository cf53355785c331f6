#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "linthresh/estimator.hpp"
#include "linthresh/profile.hpp"
#include "linthresh/simulation/scenario.hpp"

namespace linthresh::io {

// Column layouts. Numbers use 17 significant digits.
//
// profile:      u,n_suffix,alpha,beta,rss,loss,penalty,penalized,gamma_n,lambda_n
// sweep:        c,u_hat
// plateaus:     u_hat,c_first,c_last,grid_points
// scenarios:    see scenario_table_header()
// replications: scenario,u0,delta,sigma,n,c,rep,status,u_hat,alpha,beta

const std::vector<std::string>& profile_header();
const std::vector<std::string>& scenario_table_header();

void write_profile(const LossProfile& profile, const std::filesystem::path& path);

/// Inverse of write_profile. Fit means and centered moments are not stored
/// and come back zeroed.
LossProfile read_profile(const std::filesystem::path& path);

void write_sweep(const SweepResult& sweep, const std::filesystem::path& path);
void write_plateaus(const SweepResult& sweep, const std::filesystem::path& path);

/// One row per scenario; an empty span writes the header only.
void write_scenario_table(std::span<const sim::ScenarioResult> results, const std::filesystem::path& path);
void write_replications(std::span<const sim::ScenarioResult> results, const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ThresholdEstimate& estimate);
void write_json(const nlohmann::ordered_json& doc, const std::filesystem::path& path);

}  // namespace linthresh::io
