#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitlink/orbitlink.hpp"

namespace {

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

void warn_default_seed(bool seed_given) {
  if (!seed_given)
    std::fprintf(stderr, "warning: --seed not specified, using seed 0\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Availability and coverage estimates for device-to-satellite relay constellations"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string param_name;
  std::string metrics_list = "availability";
  std::string recipe_name;
  double from_value = 0.0;
  double to_value = 0.0;
  int steps = 1;
  long long trials = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  int scenarios = 20;

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter and emit CSV");
  sweep->add_option("--config", config_path, "Scenario JSON (defaults apply when omitted)");
  sweep->add_option("--param", param_name,
                    "Swept parameter: n_leo|h_leo|big_theta|tx_power_il|tx_power_lg|l_il_max|l_lg_max")
      ->required();
  sweep->add_option("--from", from_value, "First swept value")->required();
  sweep->add_option("--to", to_value, "Last swept value")->required();
  sweep->add_option("--steps", steps, "Number of sweep points")->required();
  sweep->add_option("--metrics", metrics_list,
                    "Comma-separated: availability,coverage,direct_geo,policy1,policy2,policy3");
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_option("--trials", trials, "Monte Carlo trials per point");
  auto* sweep_seed = sweep->add_option("--seed", seed, "Monte Carlo seed");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  CLI::App* recipe = app.add_subcommand("recipe", "Run a named preset sweep");
  recipe->add_option("name", recipe_name, "fig2|fig3|fig4|fig5|fig8|fig9")->required();
  recipe->add_option("--config", config_path, "Scenario JSON the preset starts from");
  recipe->add_option("--out", out_path, "Output CSV path")->required();
  recipe->add_option("--trials", trials, "Monte Carlo trials per point");
  auto* recipe_seed = recipe->add_option("--seed", seed, "Monte Carlo seed");
  recipe->add_option("--threads", threads, "Worker threads (0 = all cores)");

  CLI::App* validate = app.add_subcommand("validate", "Analytic-vs-Monte-Carlo check suite");
  validate->add_option("--scenarios", scenarios, "Randomized scenario count");
  validate->add_option("--trials", trials, "Monte Carlo trials per scenario");
  auto* validate_seed = validate->add_option("--seed", seed, "Scenario and trial seed");
  validate->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      orbitlink::SweepSpec spec;
      spec.parameter = orbitlink::sweep_parameter_from_string(param_name);
      spec.values = orbitlink::linspace(from_value, to_value, steps);
      for (const auto& name : split_csv_list(metrics_list))
        spec.metrics.push_back(orbitlink::sweep_metric_from_string(name));
      spec.mc_trials = trials;
      spec.seed = seed;
      bool any_mc = false;
      for (auto m : spec.metrics) any_mc = any_mc || orbitlink::metric_uses_mc(m);
      if (any_mc) warn_default_seed(sweep_seed->count() > 0);
      const orbitlink::ScenarioConfig base = config_path.empty()
                                                 ? orbitlink::default_scenario()
                                                 : orbitlink::parse_config(config_path);
      const orbitlink::SweepResult result = orbitlink::run_sweep(spec, base, threads);
      orbitlink::emit_csv(result, out_path);
      return 0;
    }
    if (recipe->parsed()) {
      const orbitlink::ScenarioConfig base = config_path.empty()
                                                 ? orbitlink::default_scenario()
                                                 : orbitlink::parse_config(config_path);
      const orbitlink::Recipe r =
          orbitlink::named_recipe(recipe_name, base, trials, seed);
      bool any_mc = false;
      for (auto m : r.spec.metrics) any_mc = any_mc || orbitlink::metric_uses_mc(m);
      if (any_mc) warn_default_seed(recipe_seed->count() > 0);
      const orbitlink::SweepResult result =
          orbitlink::run_sweep(r.spec, r.base, threads);
      orbitlink::emit_csv(result, out_path);
      return 0;
    }
    if (validate->parsed()) {
      warn_default_seed(validate_seed->count() > 0);
      const orbitlink::ValidationReport report =
          orbitlink::run_validation(scenarios, trials, seed, threads);
      std::fputs(report.to_text().c_str(), stdout);
      return report.all_passed() ? 0 : 4;
    }
  } catch (const orbitlink::ParseError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const orbitlink::ValidationError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const orbitlink::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const orbitlink::Error& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  }
  return 0;
}
