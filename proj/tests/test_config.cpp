#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "orbitlink/config.hpp"

using namespace orbitlink;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("an empty config yields the baseline scenario") {
  const ScenarioConfig got = parse_config_text("{}");
  const ScenarioConfig want = default_scenario();
  CHECK(got.constellation.n_leo == want.constellation.n_leo);
  CHECK(got.constellation.shell_radius_km == want.constellation.shell_radius_km);
  CHECK(got.constellation.geometry.earth_radius_km ==
        want.constellation.geometry.earth_radius_km);
  CHECK(got.constellation.geometry.geo_radius_km ==
        want.constellation.geometry.geo_radius_km);
  CHECK(got.geo_central_angle_rad == want.geo_central_angle_rad);
  CHECK(got.ill.tx_power_w == want.ill.tx_power_w);
  CHECK(got.ill.antenna_gain == want.ill.antenna_gain);
  CHECK(got.ill.wavelength_m == want.ill.wavelength_m);
  CHECK(got.ill.extra_attenuation == want.ill.extra_attenuation);
  CHECK(got.ill.noise_power_w == want.ill.noise_power_w);
  CHECK(got.ill.l_max_km == want.ill.l_max_km);
  CHECK(got.ill.snr_threshold == want.ill.snr_threshold);
  CHECK(got.lgl.tx_power_w == want.lgl.tx_power_w);
  CHECK(got.lgl.l_max_km == want.lgl.l_max_km);
  CHECK(got.lgl.snr_threshold == want.lgl.snr_threshold);
  CHECK(got.ill_fading.m == want.ill_fading.m);
  CHECK(got.ill_fading.b0 == want.ill_fading.b0);
  CHECK(got.ill_fading.omega == want.ill_fading.omega);
  CHECK(got.lgl_pointing.eta_s == want.lgl_pointing.eta_s);
  CHECK(got.lgl_pointing.a0 == want.lgl_pointing.a0);
  CHECK(got.lgl_pointing.varsigma_rad == want.lgl_pointing.varsigma_rad);
  CHECK(got.quadrature.rel_tolerance == want.quadrature.rel_tolerance);
  CHECK(got.series.max_terms == want.series.max_terms);
}

TEST_CASE("bare top-level keys are accepted with their documented units") {
  const ScenarioConfig s = parse_config_text(R"({
    "n_leo": 250,
    "theta_deg": 45,
    "tx_power_il_dbw": 18,
    "tx_power_lg_dbw": 47,
    "l_il_max_km": 2500,
    "l_lg_max_km": 32000,
    "snr_threshold_il_db": -90,
    "snr_threshold_lg_db": -95
  })");
  CHECK(s.constellation.n_leo == 250);
  CHECK(s.geo_central_angle_rad == Catch::Approx(std::numbers::pi / 4.0).epsilon(1e-15));
  CHECK(s.ill.tx_power_w == Catch::Approx(db_to_linear(18.0)));
  CHECK(s.lgl.tx_power_w == Catch::Approx(db_to_linear(47.0)));
  CHECK(s.ill.l_max_km == 2500.0);
  CHECK(s.lgl.l_max_km == 32000.0);
  CHECK(s.ill.snr_threshold == Catch::Approx(db_to_linear(-90.0)));
  CHECK(s.lgl.snr_threshold == Catch::Approx(db_to_linear(-95.0)));
}

TEST_CASE("sectioned keys configure every subsystem") {
  const ScenarioConfig s = parse_config_text(R"({
    "geometry": {"h_leo_km": 800, "theta_deg": 30},
    "constellation": {"n_leo": 400},
    "ill": {"antenna_gain_dbi": 40, "wavelength_nm": 1600,
            "extra_attenuation_db": -3, "noise_power_w": 4e-13,
            "sr_m": 10.5, "sr_b0": 0.2, "sr_omega": 1.1,
            "l_il_max_km": 2000},
    "lgl": {"eta_s": 1.2, "a0": 2.5, "varsigma_mrad": 20,
            "snr_threshold_db": -94},
    "quadrature": {"rel_tolerance": 1e-9, "abs_tolerance": 1e-12,
                   "max_subdivisions": 32},
    "series": {"max_terms": 300, "term_tolerance": 1e-13}
  })");
  CHECK(s.constellation.shell_radius_km == Catch::Approx(6371.0 + 800.0));
  CHECK(s.constellation.geometry.leo_shell_radius_km == Catch::Approx(7171.0));
  CHECK(s.geo_central_angle_rad == Catch::Approx(std::numbers::pi / 6.0));
  CHECK(s.constellation.n_leo == 400);
  CHECK(s.ill.antenna_gain == Catch::Approx(db_to_linear(40.0)));
  CHECK(s.ill.wavelength_m == Catch::Approx(1600e-9));
  CHECK(s.ill.extra_attenuation == Catch::Approx(db_to_linear(-3.0)));
  CHECK(s.ill.noise_power_w == 4e-13);
  CHECK(s.ill_fading.m == 10.5);
  CHECK(s.ill_fading.b0 == 0.2);
  CHECK(s.ill_fading.omega == 1.1);
  CHECK(s.lgl_pointing.eta_s == 1.2);
  CHECK(s.lgl_pointing.a0 == 2.5);
  CHECK(s.lgl_pointing.varsigma_rad == Catch::Approx(0.02));
  CHECK(s.lgl.snr_threshold == Catch::Approx(db_to_linear(-94.0)));
  CHECK(s.quadrature.rel_tolerance == 1e-9);
  CHECK(s.quadrature.max_subdivisions == 32);
  CHECK(s.series.max_terms == 300);
  CHECK(s.series.term_tolerance == 1e-13);
}

TEST_CASE("explicit shell radius keeps the constellation in sync") {
  const ScenarioConfig s =
      parse_config_text(R"({"geometry": {"leo_shell_radius_km": 7500}})");
  CHECK(s.constellation.shell_radius_km == 7500.0);
  CHECK(s.constellation.geometry.leo_shell_radius_km == 7500.0);
}

TEST_CASE("out-of-range links are rejected after parsing") {
  CHECK_THROWS_MATCHES(parse_config_text(R"({"l_il_max_km": 10000})"),
                       ValidationError, Catch::Matchers::MessageMatches(
                           ContainsSubstring("Earth-blockage ceiling")));
  CHECK_THROWS_AS(parse_config_text(R"({"l_lg_max_km": 90000})"), ValidationError);
  CHECK_THROWS_AS(parse_config_text(R"({"l_il_max_km": 100})"), ValidationError);
  CHECK_THROWS_AS(parse_config_text(R"({"constellation": {"n_leo": -2}})"),
                  ValidationError);
}

TEST_CASE("unknown keys are rejected by name") {
  CHECK_THROWS_MATCHES(parse_config_text(R"({"bogus_knob": 1})"), ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("bogus_knob")));
  CHECK_THROWS_MATCHES(parse_config_text(R"({"ill": {"mystery": 2}})"),
                       ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("mystery")));
  CHECK_THROWS_MATCHES(parse_config_text(R"({"ill": {"mystery": 2}})"),
                       ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("ill")));
  // Keys must live in the right section.
  CHECK_THROWS_AS(parse_config_text(R"({"lgl": {"sr_m": 3}})"), ValidationError);
  CHECK_THROWS_AS(parse_config_text(R"({"ill": {"varsigma_mrad": 3}})"),
                  ValidationError);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_config_text("{not json"), ParseError);
  CHECK_THROWS_AS(parse_config_text("[1, 2, 3]"), ParseError);
  CHECK_THROWS_MATCHES(parse_config_text(R"({"theta_deg": "45"})"), ParseError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("must be a number")));
  CHECK_THROWS_MATCHES(parse_config_text(R"({"n_leo": 2.5})"), ParseError,
                       Catch::Matchers::MessageMatches(
                           ContainsSubstring("must be an integer")));
  CHECK_THROWS_AS(parse_config_text(R"({"ill": 7})"), ParseError);
}

TEST_CASE("configs load from disk") {
  const std::string path = "orbitlink_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"n_leo": 64, "theta_deg": 10})";
  }
  const ScenarioConfig s = parse_config(path);
  CHECK(s.constellation.n_leo == 64);
  CHECK(s.geo_central_angle_rad == Catch::Approx(10.0 * std::numbers::pi / 180.0));
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_config("definitely_missing_config.json"), IoError);
}
