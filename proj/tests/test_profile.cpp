#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "linthresh/error.hpp"
#include "linthresh/profile.hpp"
#include "oracles.hpp"

using namespace linthresh;

TEST_CASE("penalty config validation") {
  PenaltyConfig ok;
  CHECK_NOTHROW(ok.validate());
  auto bad = [](auto mutate) {
    PenaltyConfig p;
    mutate(p);
    CHECK_THROWS_AS(p.validate(), Error);
  };
  bad([](PenaltyConfig& p) { p.c = -1.0; });
  bad([](PenaltyConfig& p) { p.xi = 0.5; });
  bad([](PenaltyConfig& p) { p.xi = 0.0; });
  bad([](PenaltyConfig& p) { p.eta1 = 1.0; });
  bad([](PenaltyConfig& p) { p.eta1 = 0.0; });
  bad([](PenaltyConfig& p) { p.kind = PenaltyKind::Tabulated; });
  bad([](PenaltyConfig& p) {
    p.kind = PenaltyKind::Tabulated;
    p.table = {{0, 1}, {1, 0.5}};
  });
  bad([](PenaltyConfig& p) {
    p.kind = PenaltyKind::Tabulated;
    p.table = {{0, -1}, {1, 0.5}};
  });
  bad([](PenaltyConfig& p) {
    p.kind = PenaltyKind::Tabulated;
    p.table = {{1, 0}, {1, 0.5}};
  });
}

TEST_CASE("penalty functions") {
  PenaltyConfig p;
  CHECK(p.f(3.0, 1.0) == 2.0);
  CHECK(p.f(0.5, 1.0) == 0.0);
  p.shift = 0.0;
  CHECK(p.f(3.0, 1.0) == 3.0);
  CHECK(p.f(-3.0, 1.0) == 0.0);
  p.kind = PenaltyKind::Arctan;
  CHECK(p.f(1.0, 0.0) == doctest::Approx(std::atan(1.0)));
  p.kind = PenaltyKind::Tabulated;
  p.table = {{0.0, 0.0}, {1.0, 2.0}, {3.0, 3.0}};
  CHECK(p.f(-1.0, 0.0) == 0.0);
  CHECK(p.f(0.5, 0.0) == 1.0);
  CHECK(p.f(2.0, 0.0) == 2.5);
  CHECK(p.f(9.0, 0.0) == 3.0);
  CHECK(parse_penalty_kind("arctan") == PenaltyKind::Arctan);
  CHECK_THROWS_AS(parse_penalty_kind("cubic"), Error);

  PenaltyConfig l{.c = 2.0, .xi = 0.25};
  CHECK(l.lambda(16) == doctest::Approx(1.0));
}

TEST_CASE("cutoff is the 95th order statistic for n = 100") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts(100);
  for (auto& p : pts) p = {u(rng), u(rng)};
  Sample s(pts);
  std::vector<double> xs;
  for (auto& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());

  const PenaltyConfig cfg{.c = 0.1, .eta1 = 0.05};
  CHECK(empirical_quantile_cutoff(s, 0.05) == xs[94]);
  const LossProfile prof = loss_profile(s, cfg);
  CHECK(prof.gamma_n == xs[94]);
  CHECK(prof.min_suffix == 5);
  REQUIRE(prof.entries.size() == 95);
  for (std::size_t i = 0; i < 95; ++i) CHECK(prof.entries[i].u == xs[i]);
}

TEST_CASE("minimum suffix size") {
  CHECK(minimum_suffix_size(10, 0.05) == 3);
  CHECK(minimum_suffix_size(100, 0.05) == 5);
  CHECK(minimum_suffix_size(111, 0.02) == 3);
  CHECK(minimum_suffix_size(1000, 0.05) == 50);
  CHECK(minimum_suffix_size(101, 0.05) == 6);
}

TEST_CASE("zero penalty leaves the loss column untouched") {
  std::mt19937_64 rng(2);
  const Sample s = oracle::random_instance(rng, 60, oracle::Shape::Quadratic);
  const LossProfile prof = loss_profile(s, {.c = 0.0});
  CHECK(prof.lambda_n == 0.0);
  for (const auto& e : prof.entries) CHECK(e.penalized == e.loss);
}

TEST_CASE("penalized column is loss plus weighted penalty") {
  std::mt19937_64 rng(4);
  const Sample s = oracle::random_instance(rng, 60, oracle::Shape::Kinked);
  const PenaltyConfig cfg{.c = 0.7, .xi = 0.3};
  const LossProfile prof = loss_profile(s, cfg);
  CHECK(prof.lambda_n == doctest::Approx(0.7 * std::pow(60.0, -0.3)));
  for (const auto& e : prof.entries) {
    CHECK(e.penalized == e.loss + prof.lambda_n * e.penalty);
    CHECK(e.penalty == std::max(e.u - s.min_x(), 0.0));
    CHECK(e.loss >= 0.0);
    CHECK(e.u <= prof.gamma_n);
    CHECK(e.n_suffix >= prof.min_suffix);
  }
}

TEST_CASE("duplicate covariates collapse into one candidate") {
  std::vector<Point> pts;
  for (int i = 0; i < 20; ++i) pts.push_back({double(i / 2), double(i % 5)});
  Sample s(pts);
  const LossProfile prof = loss_profile(s, {.c = 0.0, .eta1 = 0.1});
  for (std::size_t i = 1; i < prof.entries.size(); ++i) CHECK(prof.entries[i].u > prof.entries[i - 1].u);
  CHECK(prof.entries.front().n_suffix == 20);
  CHECK(prof.entries[1].n_suffix == 18);
}

TEST_CASE("degenerate suffixes are excluded and counted") {
  // The top 10 points share x = 5, so gamma_n = 5 and its suffix has no spread.
  std::vector<Point> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({double(i) / 3.0, double(i * i)});
  for (int i = 0; i < 10; ++i) pts.push_back({5.0, double(i)});
  Sample s(pts);
  const LossProfile prof = loss_profile(s, {.c = 0.1, .eta1 = 0.1});
  CHECK(prof.gamma_n == 5.0);
  CHECK(prof.excluded_degenerate == 1);
  CHECK(prof.entries.back().u < 5.0);
}

TEST_CASE("no candidate survives") {
  std::vector<Point> pts(12, Point{1.0, 0.0});
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].y = double(i);
  Sample s(pts);
  CHECK_THROWS_AS(loss_profile(s, {.c = 0.1}), NoCandidates);
}

TEST_CASE("arctan penalty on negative candidates is rejected") {
  std::vector<Point> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({i - 5.0, double(i % 3)});
  Sample s(pts);
  CHECK_THROWS_AS(loss_profile(s, {.c = 0.1, .kind = PenaltyKind::Arctan}), Error);
}

TEST_CASE("reweight swaps the penalty weight only") {
  std::mt19937_64 rng(8);
  const Sample s = oracle::random_instance(rng, 50, oracle::Shape::Wiggly);
  LossProfile a = loss_profile(s, {.c = 0.0});
  const LossProfile b = loss_profile(s, {.c = 3.0});
  reweight(a, b.lambda_n);
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].penalized == b.entries[i].penalized);
}

TEST_CASE("airquality profile cutoff") {
  const Sample s = fixtures::airquality();
  REQUIRE(s.size() == 111);
  const LossProfile prof = loss_profile(s, fixtures::airquality_penalty(250.0));
  CHECK(prof.gamma_n == 18.4);
  CHECK(prof.entries.back().u == 18.4);
  CHECK(prof.entries.front().u == 2.3);
  CHECK(prof.min_suffix == 3);
}
