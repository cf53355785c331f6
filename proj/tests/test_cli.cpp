#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <unistd.h>

#include "cli_app.hpp"
#include "fixtures.hpp"
#include "linthresh/io/csv.hpp"
#include "linthresh/io/results.hpp"
#include "linthresh/simulation/scenario.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = linthresh::cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("linthresh_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_dir() { return fixtures::data_dir().string(); }

}  // namespace

TEST_CASE("estimate reproduces the airquality fit") {
  const fs::path dir = scratch("estimate");
  const Run r = cli({"estimate", "--data-dir", data_dir(), "--c", "250", "--eta1", "0.02", "--shift", "0",
                     "--output-dir", dir.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("u_hat         10.9\n") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(dir / "estimate.json"));
  CHECK(doc["u_hat"].get<double>() == 10.9);
  CHECK(std::abs(doc["fit_at_u_hat"]["alpha"].get<double>() - 37.658) < 0.005);
  CHECK(std::abs(doc["fit_at_u_hat"]["beta"].get<double>() + 0.996) < 0.005);
  CHECK(r.out.find("beta") != std::string::npos);
  CHECK(r.out.find("std.error") != std::string::npos);
}

TEST_CASE("estimate uses the recipe defaults for the bundled data") {
  const fs::path dir = scratch("recipe");
  const Run r = cli({"estimate", "--data-dir", data_dir(), "-o", dir.string()});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(slurp(dir / "estimate.json"))["u_hat"].get<double>() == 10.9);
}

TEST_CASE("a dominant penalty selects the smallest candidate") {
  const fs::path dir = scratch("dominant");
  const Run r = cli({"estimate", "--data-dir", data_dir(), "--c", "500", "--eta1", "0.02", "--shift", "0",
                     "-o", dir.string()});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(slurp(dir / "estimate.json"))["u_hat"].get<double>() == 2.3);
}

TEST_CASE("estimate output is byte-identical across runs") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  const std::string input = (fixtures::data_dir() / "airquality.csv").string();
  const Run ra = cli({"estimate", "-i", input, "--c", "250", "--eta1", "0.02", "--psi", "1", "-o", a.string()});
  const Run rb = cli({"estimate", "-i", input, "--c", "250", "--eta1", "0.02", "--psi", "1", "-o", b.string()});
  REQUIRE(ra.status == 0);
  CHECK(ra.out == rb.out);
  CHECK(slurp(a / "estimate.json") == slurp(b / "estimate.json"));
}

TEST_CASE("profile and sweep write their tables") {
  const fs::path dir = scratch("tables");
  REQUIRE(cli({"profile", "--data-dir", data_dir(), "-o", dir.string()}).status == 0);
  CHECK(fs::exists(dir / "profile.csv"));
  CHECK(fs::exists(dir / "profile.svg"));
  const auto prof = linthresh::io::read_profile(dir / "profile.csv");
  CHECK(!prof.entries.empty());

  const Run r = cli({"sweep", "--data-dir", data_dir(), "--c-grid", "0:50:500", "-o", dir.string(), "--no-svg"});
  REQUIRE(r.status == 0);
  CHECK(fs::exists(dir / "plateaus.csv"));
  CHECK_FALSE(fs::exists(dir / "sweep.svg"));
  const std::string sweep = slurp(dir / "sweep.csv");
  using linthresh::io::format_double;
  CHECK(sweep.rfind("c,u_hat\n0," + format_double(18.4) + "\n", 0) == 0);
  CHECK(sweep.find("\n250," + format_double(10.9) + "\n") != std::string::npos);
  CHECK(sweep.find("\n500," + format_double(2.3) + "\n") != std::string::npos);
}

TEST_CASE("simulate equals the library on a noiseless single replication") {
  const fs::path dir = scratch("simulate");
  {
    std::ofstream cfg(dir / "one.cfg");
    cfg << "[scenario]\nu0 = 0.5\ndelta = -1\nsigma = 0\nn = 200\nc = 0.01\nnrep = 1\nseed = 5\n";
  }
  const Run r = cli({"simulate", "--config", (dir / "one.cfg").string(), "-o", dir.string(), "--threads", "1"});
  REQUIRE(r.status == 0);

  linthresh::sim::Scenario s{.u0 = 0.5, .delta = -1.0, .sigma = 0.0, .n = 200, .nrep = 1, .base_seed = 5};
  s.penalty.c = 0.01;
  const std::vector<linthresh::sim::ScenarioResult> direct{linthresh::sim::run_scenario(s, 1)};
  linthresh::io::write_scenario_table(direct, dir / "direct.csv");
  CHECK(slurp(dir / "scenarios.csv") == slurp(dir / "direct.csv"));
  CHECK(fs::exists(dir / "replications.csv"));
}

TEST_CASE("simulate overrides") {
  const fs::path dir = scratch("overrides");
  {
    std::ofstream cfg(dir / "g.cfg");
    cfg << "[scenario]\nn = 100\nnrep = 50\n";
  }
  REQUIRE(cli({"simulate", "--config", (dir / "g.cfg").string(), "-o", dir.string(), "--nrep", "3", "--seed", "9"})
              .status == 0);
  std::istringstream in(slurp(dir / "replications.csv"));
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 4);
}

TEST_CASE("help documents every subcommand") {
  const Run top = cli({"--help"});
  CHECK(top.status == 0);
  for (const char* sub : {"estimate", "profile", "sweep", "simulate", "report"})
    CHECK(top.out.find(sub) != std::string::npos);

  const Run est = cli({"estimate", "--help"});
  CHECK(est.status == 0);
  for (const char* flag : {"--input", "--x", "--y", "--na", "--c", "--xi", "--eta1", "--penalty", "--shift",
                           "--psi", "--output-dir", "--no-svg", "estimate.json"})
    CHECK_MESSAGE(est.out.find(flag) != std::string::npos, flag);
  CHECK(cli({"sweep", "--help"}).out.find("c,u_hat") != std::string::npos);
  const Run sim = cli({"simulate", "--help"});
  for (const char* flag : {"--config", "--threads", "--nrep", "--seed", "--full-scale", "scenarios.csv"})
    CHECK_MESSAGE(sim.out.find(flag) != std::string::npos, flag);
  CHECK(cli({"report", "--help"}).out.find("--full-scale") != std::string::npos);
}

TEST_CASE("errors map to distinct exit codes") {
  const fs::path dir = scratch("errors");
  CHECK(cli({}).status == 2);
  CHECK(cli({"estimate", "--bogus"}).status == 2);
  CHECK(cli({"estimate", "--c", "abc"}).status == 2);

  const Run bad_xi = cli({"estimate", "--data-dir", data_dir(), "--xi", "0.7", "-o", dir.string()});
  CHECK(bad_xi.status == 4);
  CHECK(bad_xi.err.find("INVALID_CONFIG") != std::string::npos);

  CHECK(cli({"estimate", "-i", (dir / "missing.csv").string(), "-o", dir.string()}).status == 11);
  {
    std::ofstream f(dir / "cols.csv");
    f << "a,b\n1,2\n2,3\n3,4\n";
  }
  const Run missing = cli({"estimate", "-i", (dir / "cols.csv").string(), "-o", dir.string()});
  CHECK(missing.status == 8);
  CHECK(missing.err.find("MISSING_COLUMN") != std::string::npos);
  {
    std::ofstream f(dir / "bad.csv");
    f << "x,y\n1,2\n2,x\n3,4\n";
  }
  CHECK(cli({"estimate", "-i", (dir / "bad.csv").string(), "--x", "x", "--y", "y", "-o", dir.string()}).status == 9);
  {
    std::ofstream f(dir / "flat.csv");
    f << "x,y\n1,2\n1,3\n1,4\n1,5\n";
  }
  const Run flat = cli({"estimate", "-i", (dir / "flat.csv").string(), "--x", "x", "--y", "y", "-o", dir.string()});
  CHECK(flat.status != 0);
  CHECK(flat.status != 1);
  CHECK(cli({"sweep", "--data-dir", data_dir(), "--c-grid", "5:1:1", "-o", dir.string()}).status == 4);
}

TEST_CASE("report regenerates the bundled suite") {
  const fs::path dir = scratch("report");
  const Run r = cli({"report", "--data-dir", data_dir(), "--nrep", "2", "--threads", "1", "-o", dir.string()});
  REQUIRE(r.status == 0);
  for (const char* f : {"airquality/estimate.json", "airquality/estimate.txt", "airquality/profile.csv",
                        "airquality/sweep.csv", "airquality/plateaus.csv", "airquality/sweep.svg",
                        "simulation/emae_n.csv", "simulation/emae_c.csv", "simulation/emae_delta.csv"})
    CHECK_MESSAGE(fs::exists(dir / f), f);
  const auto psi1 = nlohmann::json::parse(slurp(dir / "airquality/estimate_psi1.json"));
  CHECK(std::abs(psi1["refit"]["fit"]["beta"].get<double>() + 1.280) < 0.005);
}
