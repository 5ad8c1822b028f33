#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitlink/geometry.hpp"
#include "orbitlink/rng.hpp"

namespace orbitlink {

struct ConstellationConfig {
  long long n_leo = 1000;
  double shell_radius_km = 7371.0;
  GeometryConstants geometry{};

  void validate() const {
    geometry.validate();
    if (n_leo < 0) throw ValidationError("n_leo must be nonnegative");
    if (!(shell_radius_km >= geometry.earth_radius_km))
      throw ValidationError("shell_radius_km must be at least earth_radius_km");
    if (!(shell_radius_km <= geometry.geo_radius_km))
      throw ValidationError("shell_radius_km must not exceed geo_radius_km");
  }
};

// Draws n_leo points uniformly on the shell into `out` (reused across trials
// to avoid reallocation): cos(polar) uniform on [-1, 1], azimuth uniform.
inline void sample_constellation_into(const ConstellationConfig& cfg, Rng& rng,
                                      std::vector<SphericalPoint>& out) {
  cfg.validate();
  out.clear();
  out.reserve(static_cast<std::size_t>(cfg.n_leo));
  for (long long i = 0; i < cfg.n_leo; ++i) {
    const double cos_polar = rng.uniform(-1.0, 1.0);
    const double azimuth = rng.uniform(0.0, 2.0 * std::numbers::pi);
    out.emplace_back(cfg.shell_radius_km, std::acos(cos_polar), azimuth);
  }
}

inline std::vector<SphericalPoint> sample_constellation(const ConstellationConfig& cfg,
                                                        Rng& rng) {
  std::vector<SphericalPoint> out;
  sample_constellation_into(cfg, rng, out);
  return out;
}

// Index of the satellite with the smallest central angle to `target`; ties
// keep the lowest index. Empty input yields no index.
inline std::optional<std::size_t> nearest_satellite(
    const std::vector<SphericalPoint>& sats, const SphericalPoint& target) {
  std::optional<std::size_t> best{};
  double best_cos = -2.0;
  for (std::size_t i = 0; i < sats.size(); ++i) {
    const double c = cos_central_angle(target, sats[i]);
    if (c > best_cos) {
      best_cos = c;
      best = i;
    }
  }
  return best;
}

// CDF of the contact angle: the central angle between a fixed point and the
// nearest of n uniform points on the sphere. Stable form of
// 1 - ((1 + cos θ)/2)^n via log1p/expm1.
inline double contact_angle_cdf(double theta, long long n) {
  if (n < 0) throw DomainError("satellite count must be nonnegative");
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("contact angle must lie in [0, pi]");
  if (n == 0) return 0.0;
  const double s = std::sin(0.5 * theta);
  return -std::expm1(static_cast<double>(n) * std::log1p(-s * s));
}

// Density of the contact angle; the cos²(θ/2) power form stays accurate where
// (1+cos θ)/2 underflows near θ = π.
inline double contact_angle_pdf(double theta, long long n) {
  if (n < 0) throw DomainError("satellite count must be nonnegative");
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("contact angle must lie in [0, pi]");
  if (n == 0) return 0.0;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return static_cast<double>(n) * s * c *
         std::pow(c * c, static_cast<double>(n - 1));
}

// Probability that the nearest of the constellation lies within l_il_max of a
// point on the ground sphere.
inline double availability_ill(const ConstellationConfig& cfg, double l_il_max_km) {
  cfg.validate();
  const double ceiling = std::sqrt(cfg.shell_radius_km * cfg.shell_radius_km -
                                   cfg.geometry.earth_radius_km *
                                       cfg.geometry.earth_radius_km);
  if (l_il_max_km > ceiling * (1.0 + 1e-12))
    throw DomainError("l_il_max exceeds the Earth-blockage ceiling");
  const double theta_max = max_central_angle(cfg.geometry.earth_radius_km,
                                             cfg.shell_radius_km, l_il_max_km);
  return contact_angle_cdf(theta_max, cfg.n_leo);
}

// Widest azimuth offset (about the target meridian) at which the chord from a
// shell point at polar angle theta to a point at r_far, polar angle
// big_theta, stays within l_max: 0 when even the coplanar near side is out of
// range, pi when the far side is still in range, otherwise the arccos branch.
inline double azimuth_range_within(double theta, double big_theta, double r_shell_km,
                                   double r_far_km, double l_max_km) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("polar angle must lie in [0, pi]");
  if (!(big_theta >= 0.0 && big_theta <= std::numbers::pi))
    throw DomainError("target polar angle must lie in [0, pi]");
  if (!(r_shell_km > 0.0) || !(r_far_km > 0.0))
    throw DomainError("radii must be positive");
  if (!(l_max_km >= 0.0)) throw DomainError("link range must be nonnegative");
  const double d_near = chord_length(r_shell_km, r_far_km, std::cos(theta - big_theta));
  const double d_far = chord_length(r_shell_km, r_far_km, std::cos(theta + big_theta));
  if (d_near > l_max_km) return 0.0;
  if (d_far <= l_max_km) return std::numbers::pi;
  const double ss = std::sin(theta) * std::sin(big_theta);
  if (ss < 1e-15)
    throw DegenerateGeometry("azimuth interior branch reached with collapsed geometry");
  const double arg = (r_shell_km * r_shell_km + r_far_km * r_far_km -
                      l_max_km * l_max_km) /
                         (2.0 * r_shell_km * r_far_km * ss) -
                     std::cos(theta) * std::cos(big_theta) / ss;
  return checked_acos(arg);
}

// Fraction of the azimuth circle from which a shell point at polar angle
// theta reaches the target within l_lg_max.
inline double conditional_lgl_availability(double theta, const ConstellationConfig& cfg,
                                           double big_theta, double l_lg_max_km) {
  cfg.validate();
  return azimuth_range_within(theta, big_theta, cfg.shell_radius_km,
                              cfg.geometry.geo_radius_km, l_lg_max_km) /
         std::numbers::pi;
}

}  // namespace orbitlink
