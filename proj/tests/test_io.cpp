#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "fixtures.hpp"
#include "linthresh/estimator.hpp"
#include "linthresh/io/csv.hpp"
#include "linthresh/io/dataset.hpp"
#include "linthresh/io/results.hpp"
#include "linthresh/io/scenario_config.hpp"
#include "linthresh/io/svg.hpp"

using namespace linthresh;
using namespace linthresh::io;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("linthresh_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path file(const std::string& name, const std::string& contents = {}) const {
    const fs::path p = path / name;
    if (!contents.empty()) std::ofstream(p, std::ios::binary) << contents;
    return p;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> records(const std::string& text) {
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> fields;
  while (reader.next(fields)) out.push_back(fields);
  return out;
}

}  // namespace

TEST_CASE("csv reader handles quoting and line endings") {
  const auto r = records("a,\"b,c\",\"d\"\"e\"\r\n\"multi\nline\",,x\n");
  REQUIRE(r.size() == 2);
  CHECK(r[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(r[1] == std::vector<std::string>{"multi\nline", "", "x"});
  CHECK_THROWS_AS(records("\"open"), Error);
}

TEST_CASE("csv escaping round-trips") {
  const std::vector<std::string> fields{"plain", "with,comma", "quote\"d", "line\nbreak", ""};
  const auto r = records(csv_join(fields) + "\n");
  REQUIRE(r.size() == 1);
  CHECK(r[0] == fields);
  CHECK(csv_escape("plain") == "plain");
}

TEST_CASE("number formatting round-trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, 10.9, 0.0}) CHECK(*parse_double(format_double(v)) == v);
  CHECK(format_double(std::nan("")) == "NaN");
  CHECK(format_double(INFINITY) == "Inf");
  CHECK(format_double(-INFINITY) == "-Inf");
  CHECK(std::isinf(*parse_double("-Inf")));
  CHECK(*parse_double(" 2.5 ") == 2.5);
  CHECK_FALSE(parse_double("2.5x"));
  CHECK_FALSE(parse_double(""));
}

TEST_CASE("airquality fixture") {
  const Dataset d = read_csv(fixtures::airquality_spec());
  CHECK(d.sample.size() == 111);
  CHECK(d.rows_read == 111);
  CHECK(d.rows_dropped == 0);
  double sx = 0, sy = 0, sxy = 0;
  for (const auto& p : d.sample.points()) {
    sx += p.x;
    sy += p.y;
    sxy += p.x * p.y;
  }
  CHECK(sx == doctest::Approx(1103.3));
  CHECK(sy == doctest::Approx(4673));
  CHECK(sxy == doctest::Approx(38471.7));
}

TEST_CASE("raw airquality drops rows with missing ozone") {
  const Dataset d = read_csv({fixtures::data_dir() / "airquality_raw.csv", "Wind", "Ozone", {"NA"}});
  CHECK(d.rows_read == 153);
  CHECK(d.rows_dropped == 37);
  CHECK(d.sample.size() == 116);
}

TEST_CASE("dataset errors") {
  TempDir dir;
  auto code_of = [](const DatasetSpec& spec) {
    try {
      read_csv(spec);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
  };
  CHECK(code_of({dir.path / "absent.csv", "x", "y"}) == ErrorCode::Io);
  CHECK(code_of({dir.file("a.csv", "x,z\n1,2\n2,3\n3,4\n"), "x", "y"}) == ErrorCode::MissingColumn);
  CHECK(code_of({dir.file("b.csv", "x,y\nNA,1\n2,NA\nNA,NA\n"), "x", "y"}) == ErrorCode::TooFewRows);
  CHECK(code_of({dir.file("c.csv", "x,y\n1,2\n2,3\n"), "x", "y"}) == ErrorCode::TooFewRows);

  try {
    read_csv({dir.file("d.csv", "x,y\n1,2\n2,3\n3,oops\n4,5\n"), "x", "y"});
    FAIL("expected a parse error");
  } catch (const io::ParseError& e) {
    CHECK(e.row() == 3);
    CHECK(e.column() == "y");
    CHECK(e.code() == ErrorCode::ParseError);
  }
  // Custom missing markers.
  const Dataset d = read_csv({dir.file("e.csv", "x,y\n1,2\n.,3\n3,4\n4,5\n"), "x", "y", {"."}});
  CHECK(d.sample.size() == 3);
  CHECK(d.rows_dropped == 1);
}

TEST_CASE("points round-trip through csv") {
  TempDir dir;
  const Sample s({{0.1, -1.0 / 3.0}, {2.0, 1e-17}, {-5.5, 4.0}, {7.25, 0.0}, {1.0 / 7.0, 3.0}});
  const fs::path p = dir.file("pts.csv");
  write_points_csv(p, s, "Wind", "Ozone");
  const Dataset back = read_csv({p, "Wind", "Ozone"});
  REQUIRE(back.sample.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(back.sample.points()[i].x == s.points()[i].x);
    CHECK(back.sample.points()[i].y == s.points()[i].y);
  }
}

TEST_CASE("profile round-trip") {
  TempDir dir;
  const LossProfile prof = loss_profile(fixtures::airquality(), fixtures::airquality_penalty(250));
  const fs::path p = dir.file("profile.csv");
  write_profile(prof, p);
  CHECK(slurp(p).rfind("u,n_suffix,alpha,beta,rss,loss,penalty,penalized,gamma_n,lambda_n\n", 0) == 0);
  const LossProfile back = read_profile(p);
  REQUIRE(back.entries.size() == prof.entries.size());
  CHECK(back.gamma_n == prof.gamma_n);
  CHECK(back.lambda_n == prof.lambda_n);
  for (std::size_t i = 0; i < prof.entries.size(); ++i) {
    CHECK(back.entries[i].u == prof.entries[i].u);
    CHECK(back.entries[i].n_suffix == prof.entries[i].n_suffix);
    CHECK(back.entries[i].fit.beta == prof.entries[i].fit.beta);
    CHECK(back.entries[i].penalized == prof.entries[i].penalized);
  }
  CHECK(estimate_threshold(back).u_hat == estimate_threshold(prof).u_hat);
}

TEST_CASE("sweep and plateau tables") {
  TempDir dir;
  const std::vector<double> grid{0.0, 250.0, 500.0};
  const SweepResult sweep = c_sweep(fixtures::airquality(), fixtures::airquality_penalty(0), grid);
  write_sweep(sweep, dir.file("sweep.csv"));
  write_plateaus(sweep, dir.file("plateaus.csv"));
  const auto s = records(slurp(dir.path / "sweep.csv"));
  REQUIRE(s.size() == 4);
  CHECK(s[0] == std::vector<std::string>{"c", "u_hat"});
  CHECK(s[2] == std::vector<std::string>{"250", "10.9"});
  const auto pl = records(slurp(dir.path / "plateaus.csv"));
  CHECK(pl[0] == std::vector<std::string>{"u_hat", "c_first", "c_last", "grid_points"});
  CHECK(pl.size() == 1 + sweep.plateaus.size());
}

TEST_CASE("scenario tables") {
  TempDir dir;
  write_scenario_table({}, dir.file("empty.csv"));
  const auto empty = records(slurp(dir.path / "empty.csv"));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == scenario_table_header());

  const sim::Scenario sc{.n = 100, .nrep = 4};
  const std::vector<sim::ScenarioResult> results{sim::run_scenario(sc, 1)};
  write_scenario_table(results, dir.file("scen.csv"));
  write_replications(results, dir.file("reps.csv"));
  const auto rows = records(slurp(dir.path / "scen.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].size() == scenario_table_header().size());
  CHECK(records(slurp(dir.path / "reps.csv")).size() == 5);
}

TEST_CASE("estimate serializes to json") {
  const ThresholdEstimate est = estimate(fixtures::airquality(), fixtures::airquality_penalty(250), 0.0);
  const auto doc = to_json(est);
  CHECK(doc["u_hat"].get<double>() == 10.9);
  REQUIRE(doc.contains("refit"));
  CHECK(doc["refit"]["fit"]["n_used"].get<std::size_t>() == 43);
}

TEST_CASE("scenario config parsing") {
  std::istringstream in(R"(# desk grid
[defaults]
nrep = 7
seed = 11

[scenario]
u0 = 0.5, 0.75
delta = -1
sigma = 0.01
n = 200, 1000   # trailing comment
c = 0, 0.01

[scenario]
model = linear
penalty = arctan
sigma = 0
)");
  const auto scenarios = parse_scenario_config(in, "grid.cfg");
  REQUIRE(scenarios.size() == 9);
  CHECK(scenarios[0].u0 == 0.5);
  CHECK(scenarios[0].n == 200);
  CHECK(scenarios[0].penalty.c == 0.0);
  CHECK(scenarios[1].penalty.c == 0.01);
  CHECK(scenarios[2].n == 1000);
  CHECK(scenarios[4].u0 == 0.75);
  for (const auto& s : scenarios) {
    CHECK(s.nrep == 7);
    CHECK(s.base_seed == 11);
  }
  CHECK(scenarios[8].model == sim::ResponseModel::Linear);
  CHECK(scenarios[8].penalty.kind == PenaltyKind::Arctan);
  CHECK(scenarios[8].sigma == 0.0);
}

TEST_CASE("scenario config errors name the line") {
  auto message = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      parse_scenario_config(in, "bad.cfg");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidConfig);
      return e.what();
    }
    return "";
  };
  CHECK(message("[scenario]\nu0 = 1.5\n").find("bad.cfg") != std::string::npos);
  CHECK(message("[scenario]\nbogus = 1\n").find("bad.cfg:2") != std::string::npos);
  CHECK(message("[scenario]\nn = ten\n").find("bad.cfg:2") != std::string::npos);
  CHECK(message("u0 = 0.5\n").find("bad.cfg:1") != std::string::npos);
  CHECK(message("[wat]\n").find("bad.cfg:1") != std::string::npos);
}

TEST_CASE("svg output") {
  const Sample s = fixtures::airquality();
  const LossProfile prof = loss_profile(s, fixtures::airquality_penalty(250));
  const std::string svg = render_svg(profile_chart(prof, 10.9));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<path d=\"M") != std::string::npos);

  const std::vector<double> grid{0.0, 1.0, 250.0, 500.0};
  const std::string sweep_svg = render_svg(sweep_chart(c_sweep(s, fixtures::airquality_penalty(0), grid)));
  CHECK(sweep_svg.find("</svg>") != std::string::npos);

  SvgChart hostile{.title = "a < b & \"c\""};
  const std::string escaped = render_svg(hostile);
  CHECK(escaped.find("a &lt; b &amp;") != std::string::npos);
}
