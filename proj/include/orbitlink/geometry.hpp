#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbitlink/errors.hpp"

namespace orbitlink {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// arccos that forgives round-off: arguments within `guard` of [-1, 1] are
// clamped, anything further out is a DomainError.
inline double checked_acos(double x, double guard = 1e-9) {
  if (x > 1.0 + guard || x < -1.0 - guard)
    throw DomainError("arccos argument outside [-1, 1] beyond the guard band");
  return std::acos(std::clamp(x, -1.0, 1.0));
}

// Point on a sphere centred at the origin. Construction normalizes the
// angles: polar folded into [0, pi] (flipping azimuth through the pole),
// azimuth wrapped into [0, 2*pi).
struct SphericalPoint {
  double radius_km = 1.0;
  double polar_rad = 0.0;
  double azimuth_rad = 0.0;

  SphericalPoint() = default;

  SphericalPoint(double radius, double polar, double azimuth) : radius_km(radius) {
    if (!(radius > 0.0)) throw DomainError("spherical point radius must be positive");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    polar = std::fmod(polar, two_pi);
    if (polar < 0.0) polar += two_pi;
    if (polar > std::numbers::pi) {
      polar = two_pi - polar;
      azimuth += std::numbers::pi;
    }
    azimuth = std::fmod(azimuth, two_pi);
    if (azimuth < 0.0) azimuth += two_pi;
    polar_rad = polar;
    azimuth_rad = azimuth == two_pi ? 0.0 : azimuth;
  }
};

inline Vec3 to_cartesian(const SphericalPoint& p) {
  const double s = std::sin(p.polar_rad);
  return {p.radius_km * s * std::cos(p.azimuth_rad),
          p.radius_km * s * std::sin(p.azimuth_rad),
          p.radius_km * std::cos(p.polar_rad)};
}

inline SphericalPoint from_cartesian(const Vec3& v) {
  const double r = norm(v);
  if (!(r > 0.0)) throw DomainError("cannot express the origin in spherical form");
  return SphericalPoint(r, std::acos(std::clamp(v.z / r, -1.0, 1.0)),
                        std::atan2(v.y, v.x));
}

inline double cos_central_angle(const SphericalPoint& a, const SphericalPoint& b) {
  return std::sin(a.polar_rad) * std::sin(b.polar_rad) *
             std::cos(a.azimuth_rad - b.azimuth_rad) +
         std::cos(a.polar_rad) * std::cos(b.polar_rad);
}

inline double central_angle(const SphericalPoint& a, const SphericalPoint& b) {
  return checked_acos(cos_central_angle(a, b));
}

// Chord length between radii r1, r2 subtending central angle gamma.
inline double chord_length(double r1_km, double r2_km, double cos_gamma) {
  const double d2 = r1_km * r1_km + r2_km * r2_km - 2.0 * r1_km * r2_km * cos_gamma;
  return std::sqrt(std::max(d2, 0.0));
}

inline double euclidean_distance(const SphericalPoint& a, const SphericalPoint& b) {
  return chord_length(a.radius_km, b.radius_km, cos_central_angle(a, b));
}

struct GeometryConstants {
  double earth_radius_km = 6371.0;
  double leo_shell_radius_km = 7371.0;
  double geo_radius_km = 35860.0;

  void validate() const {
    if (!(earth_radius_km > 0.0))
      throw ValidationError("earth_radius_km must be positive");
    if (!(leo_shell_radius_km > earth_radius_km))
      throw ValidationError("leo_shell_radius_km must exceed earth_radius_km");
    if (!(geo_radius_km > leo_shell_radius_km))
      throw ValidationError("geo_radius_km must exceed leo_shell_radius_km");
  }
};

// Largest central angle at which a point on the inner shell and a point on
// the outer shell are within link range l_max of each other.
inline double max_central_angle(double r_inner_km, double r_outer_km, double l_max_km) {
  if (!(r_inner_km > 0.0) || !(r_outer_km >= r_inner_km))
    throw DomainError("shell radii must satisfy 0 < r_inner <= r_outer");
  if (!(l_max_km >= 0.0)) throw DomainError("link range must be nonnegative");
  const double arg = (r_inner_km * r_inner_km + r_outer_km * r_outer_km -
                      l_max_km * l_max_km) /
                     (2.0 * r_inner_km * r_outer_km);
  if (arg > 1.0 + 1e-9)
    throw DomainError("link range shorter than the shell separation");
  if (arg < -1.0 - 1e-9)
    throw DomainError("link range exceeds the shell diameter span");
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

// Longest links that still clear the Earth's limb: shell-to-shell tangential
// for LEO-to-LEO, and LEO-shell tangential-chord for LEO-to-GEO.
struct EarthBlockageBounds {
  double il_ceiling_km = 0.0;
  double lg_ceiling_km = 0.0;
};

inline EarthBlockageBounds earth_blockage_bounds(const GeometryConstants& g) {
  if (!(g.earth_radius_km > 0.0) || !(g.leo_shell_radius_km >= g.earth_radius_km) ||
      !(g.geo_radius_km >= g.leo_shell_radius_km))
    throw DomainError("radii must satisfy 0 < earth <= shell <= geo");
  const double leo2 = g.leo_shell_radius_km * g.leo_shell_radius_km;
  return {std::sqrt(leo2 - g.earth_radius_km * g.earth_radius_km),
          2.0 * std::sqrt(g.geo_radius_km * g.geo_radius_km - leo2)};
}

}  // namespace orbitlink
