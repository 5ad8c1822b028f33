#pragma once

#include <cmath>
#include <numbers>

#include "orbitlink/constellation.hpp"
#include "orbitlink/fading.hpp"
#include "orbitlink/quadrature.hpp"

namespace orbitlink {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double linear) {
  if (!(linear > 0.0)) throw DomainError("dB conversion needs a positive value");
  return 10.0 * std::log10(linear);
}

// One directed link, all-linear: dB/dBW/dBi inputs are converted exactly once
// at the parsing boundary.
struct LinkBudget {
  double tx_power_w = 1.0;
  double antenna_gain = 1.0;
  double wavelength_m = 1550e-9;
  double extra_attenuation = 1.0;
  double noise_power_w = 5e-13;
  double l_max_km = 1.0;
  double snr_threshold = 1.0;

  void validate() const {
    if (!(tx_power_w > 0.0)) throw ValidationError("tx_power must be positive");
    if (!(antenna_gain > 0.0)) throw ValidationError("antenna_gain must be positive");
    if (!(wavelength_m > 0.0)) throw ValidationError("wavelength must be positive");
    if (!(extra_attenuation > 0.0 && extra_attenuation <= 1.0))
      throw ValidationError("extra_attenuation must lie in (0, 1]");
    if (!(noise_power_w > 0.0)) throw ValidationError("noise_power must be positive");
    if (!(l_max_km > 0.0)) throw ValidationError("l_max must be positive");
    if (!(snr_threshold > 0.0)) throw ValidationError("snr_threshold must be positive");
  }

  // Fade level the receiver needs at range l so SNR clears the threshold:
  // received power is rho G zeta W / (4 pi l / lambda)^2 against noise sigma^2.
  double required_fade(double l_km) const {
    const double spread = 4.0 * std::numbers::pi * l_km * 1000.0 / wavelength_m;
    return snr_threshold * noise_power_w * spread * spread /
           (tx_power_w * antenna_gain * extra_attenuation);
  }

  // required_fade(l) = fade_coefficient_per_km2() * l², l in km.
  double fade_coefficient_per_km2() const { return required_fade(1.0); }
};

struct ScenarioConfig {
  ConstellationConfig constellation{};
  double geo_central_angle_rad = std::numbers::pi / 4.0;
  LinkBudget ill{};
  SrFadingParams ill_fading{};
  LinkBudget lgl{};
  PointingParams lgl_pointing{};
  QuadratureControl quadrature{};
  SeriesControl series{};

  void validate() const {
    constellation.validate();
    if (!(geo_central_angle_rad >= 0.0 &&
          geo_central_angle_rad <= std::numbers::pi))
      throw ValidationError("theta (IoT-to-target central angle) must lie in [0, pi]");
    ill.validate();
    ill_fading.validate();
    lgl.validate();
    lgl_pointing.validate();
    quadrature.validate();
    series.validate();
    const auto bounds = earth_blockage_bounds(geometry_for_bounds());
    if (ill.l_max_km < constellation.shell_radius_km -
                           constellation.geometry.earth_radius_km)
      throw ValidationError("l_il_max_km is below the shell separation");
    if (ill.l_max_km > bounds.il_ceiling_km * (1.0 + 1e-12))
      throw ValidationError("l_il_max_km exceeds the Earth-blockage ceiling");
    if (lgl.l_max_km > bounds.lg_ceiling_km * (1.0 + 1e-12))
      throw ValidationError("l_lg_max_km exceeds the Earth-blockage ceiling");
  }

  SphericalPoint iot_position() const {
    return SphericalPoint(constellation.geometry.earth_radius_km, 0.0, 0.0);
  }

  SphericalPoint geo_position() const {
    return SphericalPoint(constellation.geometry.geo_radius_km,
                          geo_central_angle_rad, 0.0);
  }

  double theta_il_max() const {
    return max_central_angle(constellation.geometry.earth_radius_km,
                             constellation.shell_radius_km, ill.l_max_km);
  }

 private:
  GeometryConstants geometry_for_bounds() const {
    GeometryConstants g = constellation.geometry;
    g.leo_shell_radius_km = constellation.shell_radius_km;
    return g;
  }
};

// Baseline scenario: the 1000-satellite shell at 1000 km altitude, RF uplink
// at 15 dBW with shadowed-Rician fading, 50 dBW optical downlink with
// pointing jitter, thresholds -92 dB (uplink) and -96 dB (downlink).
inline ScenarioConfig default_scenario() {
  ScenarioConfig s;
  s.constellation.n_leo = 1000;
  s.constellation.shell_radius_km = 7371.0;
  s.geo_central_angle_rad = std::numbers::pi / 4.0;

  s.ill.tx_power_w = db_to_linear(15.0);
  s.ill.antenna_gain = db_to_linear(41.7);
  s.ill.wavelength_m = 1550e-9;
  s.ill.extra_attenuation = db_to_linear(-2.0);
  s.ill.noise_power_w = 5e-13;
  s.ill.l_max_km = 3000.0;
  s.ill.snr_threshold = db_to_linear(-92.0);
  s.ill_fading = SrFadingParams{};

  s.lgl.tx_power_w = db_to_linear(50.0);
  s.lgl.antenna_gain = db_to_linear(41.7);
  s.lgl.wavelength_m = 1550e-9;
  s.lgl.extra_attenuation = 1.0;
  s.lgl.noise_power_w = 5e-13;
  s.lgl.l_max_km = 35000.0;
  s.lgl.snr_threshold = db_to_linear(-96.0);
  s.lgl_pointing = PointingParams{};

  return s;
}

}  // namespace orbitlink
