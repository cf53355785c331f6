#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "linthresh/simulation/scenario.hpp"

namespace linthresh::io {

/// Scenario grid file.
///
///   # comment
///   [defaults]          keys here apply to every later [scenario]
///   nrep = 200
///   seed = 42
///
///   [scenario]
///   u0 = 0.5
///   delta = -1
///   sigma = 0.01
///   n = 200, 1000, 2000 # lists expand to one scenario per value
///   c = 0, 0.01
///
/// Keys: u0, delta, sigma, n, c, xi, eta1, shift, penalty
/// (positive-part | arctan), model (threshold | linear), nrep, seed.
/// List-valued keys expand as a cartesian product in the order
/// u0, delta, sigma, n, c (last varies fastest).
///
/// Throws Error(InvalidConfig) with the offending line number.
std::vector<sim::Scenario> parse_scenario_config(std::istream& in, const std::string& source = "<config>");
std::vector<sim::Scenario> read_scenario_config(const std::filesystem::path& path);

}  // namespace linthresh::io
