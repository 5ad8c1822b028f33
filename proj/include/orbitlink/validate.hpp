#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "orbitlink/analysis.hpp"
#include "orbitlink/montecarlo.hpp"

namespace orbitlink {

// One analytic-vs-Monte-Carlo comparison row.
struct ValidationCheck {
  int scenario_index = 0;
  std::string metric{};
  double analytic = 0.0;
  ProbabilityEstimate mc{};
  double tolerance = 0.0;
  bool passed = false;

  double delta() const { return std::abs(analytic - mc.value); }
};

struct ValidationReport {
  std::uint64_t seed = 0;
  int scenario_count = 0;
  long long n_trials = 0;
  std::vector<ValidationCheck> checks{};

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  double max_delta() const {
    double worst = 0.0;
    for (const auto& c : checks) worst = std::max(worst, c.delta());
    return worst;
  }

  std::string to_text() const;
};

// A scenario drawn inside the physical bounds the validators assume. Index 0
// is always the empty constellation, pinning the exact-zero edge.
inline ScenarioConfig random_validation_scenario(Rng& rng, int index) {
  ScenarioConfig s = default_scenario();
  if (index == 0) {
    s.constellation.n_leo = 0;
    return s;
  }
  s.constellation.n_leo = 10 + static_cast<long long>(rng.uniform01() * 1991.0);
  const double h = 500.0 + rng.uniform01() * 1500.0;
  s.constellation.shell_radius_km = s.constellation.geometry.earth_radius_km + h;
  s.constellation.geometry.leo_shell_radius_km = s.constellation.shell_radius_km;
  s.geo_central_angle_rad = rng.uniform01() * 0.5 * std::numbers::pi;

  const auto bounds = earth_blockage_bounds(GeometryConstants{
      s.constellation.geometry.earth_radius_km, s.constellation.shell_radius_km,
      s.constellation.geometry.geo_radius_km});
  const double gap = h;
  s.ill.l_max_km =
      gap + (0.02 + 0.97 * rng.uniform01()) * (bounds.il_ceiling_km - gap);
  s.lgl.l_max_km = 27500.0 + rng.uniform01() * (0.999 * bounds.lg_ceiling_km - 27500.0);

  s.ill.tx_power_w = db_to_linear(15.0 + (2.0 * rng.uniform01() - 1.0) * 8.0);
  s.lgl.tx_power_w = db_to_linear(50.0 + (2.0 * rng.uniform01() - 1.0) * 8.0);
  s.ill.snr_threshold = db_to_linear(-92.0 + (2.0 * rng.uniform01() - 1.0) * 5.0);
  s.lgl.snr_threshold = db_to_linear(-96.0 + (2.0 * rng.uniform01() - 1.0) * 5.0);

  s.ill_fading.m = 2.0 + 23.0 * rng.uniform01();
  s.ill_fading.b0 = 0.05 + 0.25 * rng.uniform01();
  s.ill_fading.omega = 0.3 + 1.7 * rng.uniform01();
  s.lgl_pointing.eta_s = 0.8 + 0.8 * rng.uniform01();
  s.lgl_pointing.a0 = 1.5 + 3.5 * rng.uniform01();
  s.lgl_pointing.varsigma_rad = 0.005 + 0.045 * rng.uniform01();

  s.validate();
  return s;
}

// Runs analytic availability and coverage against their Monte Carlo
// estimates on `scenario_count` randomized scenarios. `analytic_bias` is a
// harness-sanity hook: a nonzero value shifts the analytic side and must
// produce a failing report.
inline ValidationReport run_validation(int scenario_count, long long n_trials,
                                       std::uint64_t seed, int n_threads = 0,
                                       double analytic_bias = 0.0) {
  if (scenario_count < 1) throw DomainError("scenario count must be at least 1");
  if (n_trials < 1) throw DomainError("trial count must be at least 1");
  ValidationReport report;
  report.seed = seed;
  report.scenario_count = scenario_count;
  report.n_trials = n_trials;

  for (int i = 0; i < scenario_count; ++i) {
    Rng gen = Rng::for_trial(seed, 0x5ce0000ULL + static_cast<std::uint64_t>(i));
    const ScenarioConfig s = random_validation_scenario(gen, i);
    const std::uint64_t mc_seed = gen.next();

    const auto push = [&](const char* metric, double analytic,
                          const ProbabilityEstimate& mc, double extra_tol) {
      const double p = std::clamp(std::max(analytic, mc.value),
                                  1.0 / static_cast<double>(n_trials),
                                  1.0 - 1.0 / static_cast<double>(n_trials));
      const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n_trials));
      ValidationCheck check;
      check.scenario_index = i;
      check.metric = metric;
      check.analytic = analytic + analytic_bias;
      check.mc = mc;
      check.tolerance = 3.0 * sigma + extra_tol + 1e-9;
      check.passed = check.delta() <= check.tolerance;
      report.checks.push_back(std::move(check));
    };

    const double vs = s.lgl_pointing.varsigma_rad;
    push("availability", availability(s).value,
         run_availability_mc(s, n_trials, mc_seed, n_threads), 0.0);
    push("coverage", coverage(s).value,
         run_coverage_mc(s, n_trials, mc_seed, n_threads), vs * vs);
  }
  return report;
}

inline std::string ValidationReport::to_text() const {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "validation seed=%llu scenarios=%d trials=%lld\n",
                static_cast<unsigned long long>(seed), scenario_count, n_trials);
  os << line;
  int passed = 0;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof(line),
                  "scenario %d %s analytic=%.9g mc=%.9g half_width=%.9g delta=%.9g "
                  "tol=%.9g %s\n",
                  c.scenario_index, c.metric.c_str(), c.analytic, c.mc.value,
                  c.mc.ci_half_width, c.delta(), c.tolerance,
                  c.passed ? "PASS" : "FAIL");
    os << line;
    if (c.passed) ++passed;
  }
  std::snprintf(line, sizeof(line), "summary max_delta=%.9g checks_passed=%d/%zu %s\n",
                max_delta(), passed, checks.size(), all_passed() ? "PASS" : "FAIL");
  os << line;
  return os.str();
}

}  // namespace orbitlink
