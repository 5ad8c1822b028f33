#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "orbitlink/analysis.hpp"
#include "orbitlink/policy.hpp"

namespace orbitlink {

enum class SweepParameter {
  n_leo,
  h_leo,
  big_theta,
  tx_power_il,
  tx_power_lg,
  l_il_max,
  l_lg_max,
};

enum class SweepMetric {
  availability,
  coverage,
  direct_geo,
  policy1,
  policy2,
  policy3,
};

inline const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::n_leo: return "n_leo";
    case SweepParameter::h_leo: return "h_leo";
    case SweepParameter::big_theta: return "big_theta";
    case SweepParameter::tx_power_il: return "tx_power_il";
    case SweepParameter::tx_power_lg: return "tx_power_lg";
    case SweepParameter::l_il_max: return "l_il_max";
    case SweepParameter::l_lg_max: return "l_lg_max";
  }
  throw DomainError("unknown sweep parameter");
}

inline const char* to_string(SweepMetric m) {
  switch (m) {
    case SweepMetric::availability: return "availability";
    case SweepMetric::coverage: return "coverage";
    case SweepMetric::direct_geo: return "direct_geo";
    case SweepMetric::policy1: return "policy1";
    case SweepMetric::policy2: return "policy2";
    case SweepMetric::policy3: return "policy3";
  }
  throw DomainError("unknown sweep metric");
}

inline SweepParameter sweep_parameter_from_string(const std::string& name) {
  for (SweepParameter p :
       {SweepParameter::n_leo, SweepParameter::h_leo, SweepParameter::big_theta,
        SweepParameter::tx_power_il, SweepParameter::tx_power_lg,
        SweepParameter::l_il_max, SweepParameter::l_lg_max})
    if (name == to_string(p)) return p;
  throw ParseError("unknown sweep parameter: " + name);
}

inline SweepMetric sweep_metric_from_string(const std::string& name) {
  for (SweepMetric m :
       {SweepMetric::availability, SweepMetric::coverage, SweepMetric::direct_geo,
        SweepMetric::policy1, SweepMetric::policy2, SweepMetric::policy3})
    if (name == to_string(m)) return m;
  throw ParseError("unknown sweep metric: " + name);
}

inline bool metric_uses_mc(SweepMetric m) {
  return m == SweepMetric::policy1 || m == SweepMetric::policy2 ||
         m == SweepMetric::policy3;
}

struct SweepSpec {
  SweepParameter parameter = SweepParameter::n_leo;
  std::vector<double> values{};
  std::vector<SweepMetric> metrics{};
  long long mc_trials = 100000;
  std::uint64_t seed = 0;

  void validate() const {
    if (values.empty()) throw ValidationError("sweep values must be nonempty");
    const bool ascending = values.size() < 2 || values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      const bool up = values[i] > values[i - 1];
      if (up != ascending || values[i] == values[i - 1])
        throw ValidationError("sweep values must be strictly monotone");
    }
    if (metrics.empty()) throw ValidationError("sweep metrics must be nonempty");
    for (SweepMetric m : metrics)
      if (metric_uses_mc(m) && mc_trials < 1000)
        throw ValidationError("mc_trials must be at least 1000 for Monte Carlo metrics");
  }
};

struct SweepCell {
  double param_value = 0.0;
  SweepMetric metric = SweepMetric::availability;
  ProbabilityEstimate estimate{};
};

struct SweepResult {
  SweepParameter parameter = SweepParameter::n_leo;
  std::vector<SweepCell> cells{};
};

// The base scenario with one swept parameter applied (CLI-facing units:
// counts, km, degrees, dBW).
inline ScenarioConfig apply_sweep_parameter(ScenarioConfig base, SweepParameter p,
                                            double value) {
  switch (p) {
    case SweepParameter::n_leo: {
      if (!(value >= 0.0) || value != std::floor(value))
        throw ValidationError("n_leo sweep values must be nonnegative integers");
      base.constellation.n_leo = static_cast<long long>(value);
      break;
    }
    case SweepParameter::h_leo:
      base.constellation.shell_radius_km =
          base.constellation.geometry.earth_radius_km + value;
      base.constellation.geometry.leo_shell_radius_km =
          base.constellation.shell_radius_km;
      break;
    case SweepParameter::big_theta:
      base.geo_central_angle_rad = value * std::numbers::pi / 180.0;
      break;
    case SweepParameter::tx_power_il:
      base.ill.tx_power_w = db_to_linear(value);
      break;
    case SweepParameter::tx_power_lg:
      base.lgl.tx_power_w = db_to_linear(value);
      break;
    case SweepParameter::l_il_max:
      base.ill.l_max_km = value;
      break;
    case SweepParameter::l_lg_max:
      base.lgl.l_max_km = value;
      break;
  }
  base.validate();
  return base;
}

namespace detail {

inline ProbabilityEstimate evaluate_metric(SweepMetric m, const ScenarioConfig& s,
                                           long long mc_trials, std::uint64_t seed,
                                           int n_threads) {
  switch (m) {
    case SweepMetric::availability: return availability(s);
    case SweepMetric::coverage: return coverage(s);
    case SweepMetric::direct_geo: return analytic_estimate(coverage_direct_geo(s));
    case SweepMetric::policy1:
      return policy_coverage_mc(RelayPolicy::nearest_to_iot, s, mc_trials, seed,
                                n_threads);
    case SweepMetric::policy2:
      return policy_coverage_mc(RelayPolicy::nearest_to_geo, s, mc_trials, seed,
                                n_threads);
    case SweepMetric::policy3:
      return policy_coverage_mc(RelayPolicy::nearest_to_direct_line, s, mc_trials,
                                seed, n_threads);
  }
  throw DomainError("unknown sweep metric");
}

// Rethrows a cell failure with the swept value prepended, preserving the
// error type the caller dispatches on.
[[noreturn]] inline void rethrow_tagged(SweepParameter p, double value) {
  char tag[96];
  std::snprintf(tag, sizeof(tag), "%s=%.9g: ", to_string(p), value);
  try {
    throw;
  } catch (const QuadratureError& e) {
    throw QuadratureError(tag + std::string(e.what()));
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(tag + std::string(e.what()));
  } catch (const ValidationError& e) {
    throw ValidationError(tag + std::string(e.what()));
  } catch (const DomainError& e) {
    throw DomainError(tag + std::string(e.what()));
  } catch (const Error& e) {
    throw Error(tag + std::string(e.what()));
  }
}

}  // namespace detail

// Evaluates every (value, metric) cell. Cells are independent; they are
// dispatched to a pool when there are enough of them, otherwise evaluated in
// order with the thread budget handed to the Monte Carlo engine. Both paths
// produce identical estimates: trial streams depend only on (seed, trial
// index), so results are invariant to how work is partitioned.
inline SweepResult run_sweep(const SweepSpec& spec, const ScenarioConfig& base,
                             int n_threads = 0) {
  spec.validate();
  base.validate();
  const int workers = detail::resolve_worker_count(n_threads);
  SweepResult result;
  result.parameter = spec.parameter;
  result.cells.resize(spec.values.size() * spec.metrics.size());
  for (std::size_t vi = 0; vi < spec.values.size(); ++vi)
    for (std::size_t mi = 0; mi < spec.metrics.size(); ++mi) {
      auto& cell = result.cells[vi * spec.metrics.size() + mi];
      cell.param_value = spec.values[vi];
      cell.metric = spec.metrics[mi];
    }

  const auto evaluate_cell = [&](SweepCell& cell, int cell_threads) {
    try {
      const ScenarioConfig s =
          apply_sweep_parameter(base, spec.parameter, cell.param_value);
      cell.estimate = detail::evaluate_metric(cell.metric, s, spec.mc_trials,
                                              spec.seed, cell_threads);
    } catch (...) {
      detail::rethrow_tagged(spec.parameter, cell.param_value);
    }
  };

  if (workers > 1 && result.cells.size() >= 2 * static_cast<std::size_t>(workers)) {
    std::vector<std::exception_ptr> failures(result.cells.size());
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= result.cells.size()) return;
          try {
            evaluate_cell(result.cells[i], 1);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& failure : failures)
      if (failure) std::rethrow_exception(failure);
  } else {
    for (auto& cell : result.cells) evaluate_cell(cell, workers);
  }
  return result;
}

namespace detail {

inline std::string format_sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace detail

inline void emit_csv(const SweepResult& result, std::ostream& os) {
  os << "param,param_value,metric,value,ci_half_width,provenance\n";
  const char* param = to_string(result.parameter);
  for (const auto& cell : result.cells) {
    os << param << ',' << detail::format_sig9(cell.param_value) << ','
       << to_string(cell.metric) << ',' << detail::format_sig9(cell.estimate.value)
       << ',';
    if (cell.estimate.provenance == Provenance::monte_carlo)
      os << detail::format_sig9(cell.estimate.ci_half_width);
    os << ',';
    os << (cell.estimate.provenance == Provenance::monte_carlo ? "monte-carlo"
                                                               : "analytic");
    os << '\n';
  }
}

inline void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  emit_csv(result, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

inline std::vector<double> linspace(double from, double to, int steps) {
  if (steps < 1) throw DomainError("linspace needs at least one step");
  if (steps == 1) return {from};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    out.push_back(from + (to - from) * i / (steps - 1));
  return out;
}

// A preconfigured sweep plus the base-scenario overrides it assumes.
struct Recipe {
  SweepSpec spec{};
  ScenarioConfig base{};
};

// Named experiment presets over the default scenario: constellation size and
// device-target angle for availability, transmit power for coverage, and the
// policy comparisons. Power axes span the default +/- 20 dB.
inline Recipe named_recipe(const std::string& name, const ScenarioConfig& base,
                           long long mc_trials, std::uint64_t seed) {
  Recipe r;
  r.base = base;
  r.spec.mc_trials = mc_trials;
  r.spec.seed = seed;
  if (name == "fig2") {
    r.spec.parameter = SweepParameter::n_leo;
    r.spec.values = linspace(100.0, 1000.0, 10);
    r.spec.metrics = {SweepMetric::availability};
  } else if (name == "fig3") {
    r.base.constellation.n_leo = 100;
    r.spec.parameter = SweepParameter::big_theta;
    r.spec.values = linspace(0.0, 90.0, 19);
    r.spec.metrics = {SweepMetric::availability};
  } else if (name == "fig4") {
    r.spec.parameter = SweepParameter::tx_power_il;
    r.spec.values = linspace(-5.0, 35.0, 17);
    r.spec.metrics = {SweepMetric::coverage};
  } else if (name == "fig5") {
    r.spec.parameter = SweepParameter::tx_power_lg;
    r.spec.values = linspace(30.0, 70.0, 17);
    r.spec.metrics = {SweepMetric::coverage};
  } else if (name == "fig8") {
    r.base.geo_central_angle_rad = std::numbers::pi / 12.0;
    r.spec.parameter = SweepParameter::tx_power_il;
    r.spec.values = linspace(-5.0, 35.0, 17);
    r.spec.metrics = {SweepMetric::policy1, SweepMetric::policy2,
                      SweepMetric::policy3};
  } else if (name == "fig9") {
    r.spec.parameter = SweepParameter::big_theta;
    r.spec.values = linspace(0.0, 30.0, 13);
    r.spec.metrics = {SweepMetric::policy1, SweepMetric::policy2,
                      SweepMetric::policy3};
  } else {
    throw ParseError("unknown recipe: " + name +
                     " (expected fig2|fig3|fig4|fig5|fig8|fig9)");
  }
  return r;
}

}  // namespace orbitlink
