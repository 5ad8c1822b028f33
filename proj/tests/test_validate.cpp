#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "orbitlink/validate.hpp"

using namespace orbitlink;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("randomized scenarios respect every model bound") {
  Rng rng(5150);
  for (int i = 1; i <= 100; ++i) {
    Rng gen(rng.next());
    const ScenarioConfig s = random_validation_scenario(gen, i);
    CHECK_NOTHROW(s.validate());
    CHECK(s.constellation.n_leo >= 10);
    CHECK(s.constellation.n_leo <= 2000);
    CHECK(s.constellation.shell_radius_km >= 6871.0);
    CHECK(s.constellation.shell_radius_km <= 8371.0);
    CHECK(s.geo_central_angle_rad >= 0.0);
    CHECK(s.geo_central_angle_rad <= 0.5 * std::numbers::pi);
    CHECK(s.theta_il_max() > 0.0);
    CHECK(s.lgl_pointing.varsigma_rad >= 0.005);
    CHECK(s.lgl_pointing.varsigma_rad <= 0.05);
  }
}

TEST_CASE("scenario index zero pins the empty constellation") {
  Rng gen(1);
  const ScenarioConfig s = random_validation_scenario(gen, 0);
  CHECK(s.constellation.n_leo == 0);
  CHECK(availability(s).value == 0.0);
  CHECK(coverage(s).value == 0.0);
}

TEST_CASE("a modest validation run passes every check") {
  const ValidationReport report = run_validation(6, 20000, 424242);
  CHECK(report.scenario_count == 6);
  CHECK(report.n_trials == 20000);
  REQUIRE(report.checks.size() == 12);
  for (const auto& check : report.checks) {
    INFO("scenario " << check.scenario_index << " " << check.metric
                     << " delta=" << check.delta() << " tol=" << check.tolerance);
    CHECK(check.passed);
  }
  CHECK(report.all_passed());
  CHECK(report.max_delta() < 0.02);

  // The empty-constellation scenario is an exact zero on both sides.
  CHECK(report.checks[0].analytic == 0.0);
  CHECK(report.checks[0].mc.value == 0.0);
  CHECK(report.checks[1].analytic == 0.0);
  CHECK(report.checks[1].mc.value == 0.0);
}

TEST_CASE("a biased analytic side must fail the report") {
  const ValidationReport report = run_validation(3, 5000, 11, 0, 0.2);
  CHECK(!report.all_passed());
  CHECK(report.max_delta() >= 0.1);
  CHECK_THAT(report.to_text(), ContainsSubstring("FAIL"));
}

TEST_CASE("validation reports are deterministic text") {
  const ValidationReport a = run_validation(3, 5000, 2026, 1);
  const ValidationReport b = run_validation(3, 5000, 2026, 4);
  CHECK(a.to_text() == b.to_text());
  CHECK_THAT(a.to_text(), ContainsSubstring("validation seed=2026 scenarios=3 trials=5000"));
  CHECK_THAT(a.to_text(), ContainsSubstring("scenario 0 availability"));
  CHECK_THAT(a.to_text(), ContainsSubstring("scenario 2 coverage"));
  CHECK_THAT(a.to_text(), ContainsSubstring("summary max_delta="));
  CHECK_THAT(a.to_text(), ContainsSubstring("checks_passed=6/6 PASS"));
}

TEST_CASE("validation input guards") {
  CHECK_THROWS_AS(run_validation(0, 1000, 1), DomainError);
  CHECK_THROWS_AS(run_validation(3, 0, 1), DomainError);
}
