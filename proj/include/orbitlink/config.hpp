#pragma once

#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "orbitlink/scenario.hpp"

namespace orbitlink {

namespace detail {

inline double number_at(const nlohmann::json& obj, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ParseError("key '" + key + "' must be a number");
  return v.get<double>();
}

inline long long integer_at(const nlohmann::json& obj, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError("key '" + key + "' must be an integer");
  return v.get<long long>();
}

// Applies every recognized key of `section`, then rejects leftovers by name.
template <class Apply>
void apply_section(const nlohmann::json& section, const std::string& where,
                   Apply&& apply) {
  if (!section.is_object())
    throw ParseError("section '" + where + "' must be a JSON object");
  for (const auto& [key, value] : section.items()) {
    (void)value;
    if (!apply(key))
      throw ValidationError("unknown key '" + key + "' in section '" + where + "'");
  }
}

}  // namespace detail

// Builds a scenario from a parsed JSON document: the default scenario
// overlaid with the sections {geometry, constellation, ill, lgl, quadrature,
// series}. Common bare keys (theta_deg, l_il_max_km, ...) are also accepted
// at the top level. All dB/dBi/dBW/degree/nm/mrad values convert to
// linear/SI here; nothing downstream ever converts units again.
inline ScenarioConfig scenario_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("config root must be a JSON object");
  ScenarioConfig s = default_scenario();

  const auto geometry = [&](const nlohmann::json& obj, const std::string& key) {
    auto& g = s.constellation.geometry;
    if (key == "earth_radius_km") g.earth_radius_km = detail::number_at(obj, key);
    else if (key == "leo_shell_radius_km") {
      g.leo_shell_radius_km = detail::number_at(obj, key);
      s.constellation.shell_radius_km = g.leo_shell_radius_km;
    } else if (key == "h_leo_km") {
      g.leo_shell_radius_km = g.earth_radius_km + detail::number_at(obj, key);
      s.constellation.shell_radius_km = g.leo_shell_radius_km;
    } else if (key == "geo_radius_km") g.geo_radius_km = detail::number_at(obj, key);
    else if (key == "theta_deg")
      s.geo_central_angle_rad = detail::number_at(obj, key) * std::numbers::pi / 180.0;
    else return false;
    return true;
  };

  const auto constellation = [&](const nlohmann::json& obj, const std::string& key) {
    if (key == "n_leo") s.constellation.n_leo = detail::integer_at(obj, key);
    else return false;
    return true;
  };

  const auto link = [&](LinkBudget& budget, const std::string& side,
                        const nlohmann::json& obj, const std::string& key) {
    if (key == "tx_power_" + side + "_dbw")
      budget.tx_power_w = db_to_linear(detail::number_at(obj, key));
    else if (key == "antenna_gain_dbi")
      budget.antenna_gain = db_to_linear(detail::number_at(obj, key));
    else if (key == "wavelength_nm")
      budget.wavelength_m = detail::number_at(obj, key) * 1e-9;
    else if (key == "extra_attenuation_db")
      budget.extra_attenuation = db_to_linear(detail::number_at(obj, key));
    else if (key == "noise_power_w")
      budget.noise_power_w = detail::number_at(obj, key);
    else if (key == "l_" + side + "_max_km")
      budget.l_max_km = detail::number_at(obj, key);
    else if (key == "snr_threshold_db")
      budget.snr_threshold = db_to_linear(detail::number_at(obj, key));
    else return false;
    return true;
  };

  const auto ill = [&](const nlohmann::json& obj, const std::string& key) {
    if (link(s.ill, "il", obj, key)) return true;
    if (key == "sr_m") s.ill_fading.m = detail::number_at(obj, key);
    else if (key == "sr_b0") s.ill_fading.b0 = detail::number_at(obj, key);
    else if (key == "sr_omega") s.ill_fading.omega = detail::number_at(obj, key);
    else return false;
    return true;
  };

  const auto lgl = [&](const nlohmann::json& obj, const std::string& key) {
    if (link(s.lgl, "lg", obj, key)) return true;
    if (key == "eta_s") s.lgl_pointing.eta_s = detail::number_at(obj, key);
    else if (key == "a0") s.lgl_pointing.a0 = detail::number_at(obj, key);
    else if (key == "varsigma_mrad")
      s.lgl_pointing.varsigma_rad = detail::number_at(obj, key) * 1e-3;
    else return false;
    return true;
  };

  const auto quadrature = [&](const nlohmann::json& obj, const std::string& key) {
    if (key == "rel_tolerance") s.quadrature.rel_tolerance = detail::number_at(obj, key);
    else if (key == "abs_tolerance")
      s.quadrature.abs_tolerance = detail::number_at(obj, key);
    else if (key == "max_subdivisions")
      s.quadrature.max_subdivisions = static_cast<int>(detail::integer_at(obj, key));
    else return false;
    return true;
  };

  const auto series = [&](const nlohmann::json& obj, const std::string& key) {
    if (key == "max_terms")
      s.series.max_terms = static_cast<int>(detail::integer_at(obj, key));
    else if (key == "term_tolerance")
      s.series.term_tolerance = detail::number_at(obj, key);
    else return false;
    return true;
  };

  for (const auto& [key, value] : doc.items()) {
    if (key == "geometry")
      detail::apply_section(value, key, [&](const std::string& k) { return geometry(value, k); });
    else if (key == "constellation")
      detail::apply_section(value, key, [&](const std::string& k) { return constellation(value, k); });
    else if (key == "ill")
      detail::apply_section(value, key, [&](const std::string& k) { return ill(value, k); });
    else if (key == "lgl")
      detail::apply_section(value, key, [&](const std::string& k) { return lgl(value, k); });
    else if (key == "quadrature")
      detail::apply_section(value, key, [&](const std::string& k) { return quadrature(value, k); });
    else if (key == "series")
      detail::apply_section(value, key, [&](const std::string& k) { return series(value, k); });
    else if (geometry(doc, key) || constellation(doc, key)) {
      // spec'd bare keys shared with the sections
    } else if (key == "tx_power_il_dbw" || key == "l_il_max_km")
      ill(doc, key);
    else if (key == "tx_power_lg_dbw" || key == "l_lg_max_km")
      lgl(doc, key);
    else if (key == "snr_threshold_il_db")
      s.ill.snr_threshold = db_to_linear(detail::number_at(doc, key));
    else if (key == "snr_threshold_lg_db")
      s.lgl.snr_threshold = db_to_linear(detail::number_at(doc, key));
    else
      throw ValidationError("unknown key '" + key + "' at config top level");
  }

  s.validate();
  return s;
}

inline ScenarioConfig parse_config_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

inline ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading config file: " + path);
  return parse_config_text(text);
}

}  // namespace orbitlink
