#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "orbitlink/estimate.hpp"
#include "orbitlink/scenario.hpp"

namespace orbitlink {

namespace detail {

// Clamp a quadrature result into [0, 1]; anything further out than the
// residual budget is a genuine integration failure, not round-off.
inline double clamp_probability(double v, double residual = 1e-9) {
  if (std::isnan(v) || v < -residual || v > 1.0 + residual)
    throw QuadratureError("quadrature produced a value outside [0, 1] beyond the allowed residual");
  return std::clamp(v, 0.0, 1.0);
}

// Polar angles in (0, theta_max) where the azimuth-visibility expression for
// critical range l_km changes branch, i.e. where the coplanar chords cross
// l_km. Located by sign scan plus bisection on each chord-minus-range curve.
inline void append_azimuth_branch_angles(double big_theta, double r_shell_km,
                                         double r_far_km, double l_km,
                                         double theta_max, std::vector<double>& out) {
  const auto near_gap = [&](double th) {
    return chord_length(r_shell_km, r_far_km, std::cos(th - big_theta)) - l_km;
  };
  const auto far_gap = [&](double th) {
    return chord_length(r_shell_km, r_far_km, std::cos(th + big_theta)) - l_km;
  };
  const auto locate = [&](auto& gap) {
    constexpr int scan = 256;
    double prev_theta = 0.0;
    double prev_value = gap(0.0);
    for (int i = 1; i <= scan; ++i) {
      const double theta = theta_max * i / scan;
      const double value = gap(theta);
      if ((prev_value <= 0.0) != (value <= 0.0)) {
        double lo = prev_theta;
        double hi = theta;
        for (int iter = 0; iter < 200 && hi - lo > 1e-15 * theta_max; ++iter) {
          const double mid = 0.5 * (lo + hi);
          if ((gap(mid) <= 0.0) == (prev_value <= 0.0))
            lo = mid;
          else
            hi = mid;
        }
        out.push_back(0.5 * (lo + hi));
      }
      prev_theta = theta;
      prev_value = value;
    }
  };
  locate(near_gap);
  locate(far_gap);
}

inline std::vector<double> quadrature_panels(std::vector<double> boundaries,
                                             double theta_max) {
  std::vector<double> panels;
  panels.push_back(0.0);
  std::sort(boundaries.begin(), boundaries.end());
  for (double b : boundaries)
    if (b > panels.back() + 1e-12 * theta_max && b < theta_max * (1.0 - 1e-12))
      panels.push_back(b);
  panels.push_back(theta_max);
  return panels;
}

}  // namespace detail

// Exposed for tests: the panel boundaries the availability and coverage
// integrals insert for a given critical range.
inline std::vector<double> lgl_branch_boundaries(const ScenarioConfig& s, double l_km) {
  s.validate();
  std::vector<double> out;
  detail::append_azimuth_branch_angles(
      s.geo_central_angle_rad, s.constellation.shell_radius_km,
      s.constellation.geometry.geo_radius_km, l_km, s.theta_il_max(), out);
  std::sort(out.begin(), out.end());
  return out;
}

// End-to-end availability: the chance that the nearest satellite is within
// uplink range and, over its azimuth about the device, within downlink range
// of the target. Outer adaptive quadrature over the contact-angle density
// with panels split where the azimuth expression changes branch.
inline ProbabilityEstimate availability(const ScenarioConfig& s) {
  s.validate();
  if (s.constellation.n_leo == 0) return analytic_estimate(0.0);
  const double theta_max = s.theta_il_max();
  if (theta_max == 0.0) return analytic_estimate(0.0);
  const double r_shell = s.constellation.shell_radius_km;
  const double r_geo = s.constellation.geometry.geo_radius_km;
  const long long n = s.constellation.n_leo;
  const double big_theta = s.geo_central_angle_rad;
  const double l_lg = s.lgl.l_max_km;

  const auto integrand = [&](double theta) {
    return contact_angle_pdf(theta, n) *
           (azimuth_range_within(theta, big_theta, r_shell, r_geo, l_lg) /
            std::numbers::pi);
  };
  std::vector<double> cuts;
  detail::append_azimuth_branch_angles(big_theta, r_shell, r_geo, l_lg, theta_max,
                                       cuts);
  double total = 0.0;
  const auto panels = detail::quadrature_panels(std::move(cuts), theta_max);
  for (std::size_t i = 0; i + 1 < panels.size(); ++i)
    total += integrate_adaptive(integrand, panels[i], panels[i + 1], s.quadrature);
  return analytic_estimate(detail::clamp_probability(total));
}

// Chance the nearest satellite exists within uplink range at all, regardless
// of the downlink.
inline ProbabilityEstimate ill_availability(const ScenarioConfig& s) {
  s.validate();
  return analytic_estimate(availability_ill(s.constellation, s.ill.l_max_km));
}

// Uplink SNR success probability conditioned on the contact angle.
inline double snr_coverage_ill(double theta, const ScenarioConfig& s) {
  s.validate();
  const double theta_max = s.theta_il_max();
  if (!(theta >= 0.0 && theta <= theta_max * (1.0 + 1e-12)))
    throw DomainError("contact angle outside [0, theta_il_max]");
  const double r1 = s.constellation.geometry.earth_radius_km;
  const double r2 = s.constellation.shell_radius_km;
  const double l = chord_length(r1, r2, std::cos(theta));
  return 1.0 - sr_cdf(s.ill.required_fade(l), s.ill_fading, s.series);
}

// Downlink SNR success probability conditioned on the relay's polar angle
// and azimuth about the device-target meridian.
inline double snr_coverage_lgl(double theta, double phi, const ScenarioConfig& s) {
  s.validate();
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("polar angle must lie in [0, pi]");
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw DomainError("azimuth offset must lie in [0, pi]");
  const SphericalPoint relay(s.constellation.shell_radius_km, theta, phi);
  const double d = euclidean_distance(relay, s.geo_position());
  return 1.0 - pointing_cdf(s.lgl.required_fade(d), s.lgl_pointing);
}

// End-to-end coverage: availability with both SNR gates applied. The inner
// azimuth integral runs to the visibility bound further truncated where the
// required downlink fade exceeds the pointing cap a0; both critical ranges
// contribute panel boundaries to the outer integral.
inline ProbabilityEstimate coverage(const ScenarioConfig& s) {
  s.validate();
  if (s.constellation.n_leo == 0) return analytic_estimate(0.0);
  const double theta_max = s.theta_il_max();
  if (theta_max == 0.0) return analytic_estimate(0.0);
  const double r_earth = s.constellation.geometry.earth_radius_km;
  const double r_shell = s.constellation.shell_radius_km;
  const double r_geo = s.constellation.geometry.geo_radius_km;
  const long long n = s.constellation.n_leo;
  const double big_theta = s.geo_central_angle_rad;

  const double k_il = s.ill.fade_coefficient_per_km2();
  const double k_lg = s.lgl.fade_coefficient_per_km2();
  // Beyond this chord the downlink needs more than the full collected
  // fraction a0, so its success probability is identically zero.
  const double l_pointing_cap = std::sqrt(s.lgl_pointing.a0 / k_lg);
  const double l_cut = std::min(s.lgl.l_max_km, l_pointing_cap);

  const double rr2 = r_shell * r_shell + r_geo * r_geo;
  const double two_rr = 2.0 * r_shell * r_geo;
  const double cos_big = std::cos(big_theta);
  const double sin_big = std::sin(big_theta);

  const auto integrand = [&](double theta) {
    const double phi_cut =
        azimuth_range_within(theta, big_theta, r_shell, r_geo, l_cut);
    if (phi_cut == 0.0) return 0.0;
    const double l2_il = r_earth * r_earth + r_shell * r_shell -
                         2.0 * r_earth * r_shell * std::cos(theta);
    const double p_il = 1.0 - sr_cdf(k_il * l2_il, s.ill_fading, s.series);
    const double sin_th = std::sin(theta);
    const double cos_th = std::cos(theta);
    const double inner = gauss_legendre_64(
        [&](double phi) {
          const double d2 =
              rr2 - two_rr * (sin_th * sin_big * std::cos(phi) + cos_th * cos_big);
          return 1.0 - pointing_cdf(k_lg * std::max(d2, 0.0), s.lgl_pointing);
        },
        0.0, phi_cut);
    return contact_angle_pdf(theta, n) * p_il * inner / std::numbers::pi;
  };

  std::vector<double> cuts;
  detail::append_azimuth_branch_angles(big_theta, r_shell, r_geo, l_cut, theta_max,
                                       cuts);
  double total = 0.0;
  const auto panels = detail::quadrature_panels(std::move(cuts), theta_max);
  for (std::size_t i = 0; i + 1 < panels.size(); ++i)
    total += integrate_adaptive(integrand, panels[i], panels[i + 1], s.quadrature);
  return analytic_estimate(detail::clamp_probability(total));
}

// Coverage of the single direct device-to-target uplink, with the target
// below the horizon giving zero.
inline double coverage_direct_geo(const ScenarioConfig& s) {
  s.validate();
  const double horizon = checked_acos(s.constellation.geometry.earth_radius_km /
                                      s.constellation.geometry.geo_radius_km);
  if (s.geo_central_angle_rad > horizon) return 0.0;
  const double d = euclidean_distance(s.iot_position(), s.geo_position());
  return 1.0 - sr_cdf(s.ill.required_fade(d), s.ill_fading, s.series);
}

// Smallest constellation size reaching the availability target, by
// exponential bracketing then binary search; availability is nondecreasing
// in the satellite count.
inline long long min_satellites_for_availability(const ScenarioConfig& s, double target) {
  s.validate();
  if (!(target > 0.0 && target < 1.0))
    throw DomainError("availability target must lie in (0, 1)");
  constexpr long long cap = 10'000'000;
  const auto value_at = [&](long long n) {
    ScenarioConfig t = s;
    t.constellation.n_leo = n;
    return availability(t).value;
  };
  long long hi = 1;
  while (value_at(hi) < target) {
    if (hi >= cap)
      throw UnreachableError("availability target unreachable within 1e7 satellites");
    hi = std::min(cap, hi * 2);
  }
  long long lo = hi / 2;
  while (lo + 1 < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (value_at(mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace orbitlink
