#pragma once

#include <algorithm>
#include <cmath>

#include "orbitlink/errors.hpp"
#include "orbitlink/rng.hpp"

namespace orbitlink {

// Shadowed-Rician power fading: a Rician line of sight whose mean power is
// itself Nakagami-distributed.
struct SrFadingParams {
  double m = 19.4;
  double b0 = 0.158;
  double omega = 1.29;

  void validate() const {
    if (!(m > 0.0)) throw ValidationError("sr_m must be positive");
    if (!(b0 > 0.0)) throw ValidationError("sr_b0 must be positive");
    if (!(omega >= 0.0)) throw ValidationError("sr_omega must be nonnegative");
  }
};

struct SeriesControl {
  int max_terms = 200;
  double term_tolerance = 1e-12;

  void validate() const {
    if (max_terms < 1) throw ValidationError("series max_terms must be at least 1");
    if (!(term_tolerance > 0.0))
      throw ValidationError("series term_tolerance must be positive");
  }
};

// Optical pointing loss: the collected power fraction under Rayleigh-
// distributed beam jitter, capped at the perfectly aligned fraction a0.
struct PointingParams {
  double eta_s = 1.00526;
  double a0 = 3.2120;
  double varsigma_rad = 0.015;

  void validate() const {
    if (!(eta_s > 0.0)) throw ValidationError("eta_s must be positive");
    if (!(a0 > 0.0)) throw ValidationError("a0 must be positive");
    if (!(varsigma_rad > 0.0) || !(varsigma_rad < 1.0))
      throw ValidationError("varsigma_rad must lie in (0, 1)");
  }
};

namespace detail {

// Advances c_z = (m)_z eps^z / z! to c_{z+1}; keeps the series free of
// explicit factorials and Pochhammer products.
inline double sr_next_coefficient(double c, double eps, double m, int z) {
  return c * eps * (m + z) / (z + 1.0);
}

}  // namespace detail

// z-th series coefficient (m)_z eps^z / z! with eps = omega/(2 b0 m + omega),
// built by the same recurrence the CDF uses.
inline double sr_series_coefficient(const SrFadingParams& p, int z) {
  p.validate();
  if (z < 0) throw DomainError("series index must be nonnegative");
  const double eps = p.omega / (2.0 * p.b0 * p.m + p.omega);
  double c = 1.0;
  for (int k = 0; k < z; ++k) c = detail::sr_next_coefficient(c, eps, p.m, k);
  return c;
}

// CDF of the shadowed-Rician power at w: a prefactored series of regularized
// lower incomplete gamma terms, each advanced by a Poisson-ladder recurrence.
// Truncates once a term falls below term_tolerance of the partial sum.
inline double sr_cdf(double w, const SrFadingParams& p, const SeriesControl& ctl = {}) {
  p.validate();
  ctl.validate();
  if (std::isnan(w)) throw DomainError("fade level must not be NaN");
  if (w <= 0.0) return 0.0;
  const double eps = p.omega / (2.0 * p.b0 * p.m + p.omega);
  const double x = w / (2.0 * p.b0);
  double coeff = 1.0;
  double pois = std::exp(-x);
  double pois_sum = pois;
  double sum = 0.0;
  for (int z = 0;; ++z) {
    const double term = coeff * std::max(1.0 - pois_sum, 0.0);
    sum += term;
    if (z > 0 && term <= ctl.term_tolerance * sum) break;
    if (z + 1 >= ctl.max_terms) {
      if (term > 1e-6 * sum)
        throw ConvergenceError("shadowed-Rician series still large at max_terms");
      break;
    }
    coeff = detail::sr_next_coefficient(coeff, eps, p.m, z);
    pois *= x / (z + 1.0);
    pois_sum += pois;
  }
  const double prefactor =
      std::pow(2.0 * p.b0 * p.m / (2.0 * p.b0 * p.m + p.omega), p.m);
  return std::clamp(prefactor * sum, 0.0, 1.0);
}

// One shadowed-Rician power draw, built from its physical definition:
// |scatter + line-of-sight|² with Nakagami-shadowed line-of-sight amplitude.
inline double sample_sr(const SrFadingParams& p, Rng& rng) {
  p.validate();
  const auto [n1, n2] = rng.normal_pair();
  const double sigma = std::sqrt(p.b0);
  const double los =
      p.omega > 0.0 ? std::sqrt(rng.gamma(p.m, p.omega / p.m)) : 0.0;
  const double psi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double re = sigma * n1 + los * std::cos(psi);
  const double im = sigma * n2 + los * std::sin(psi);
  return re * re + im * im;
}

// CDF of the collected fraction given a fixed jitter displacement theta_d.
inline double pointing_cdf_conditional(double w, double theta_d, const PointingParams& p) {
  p.validate();
  if (std::isnan(w)) throw DomainError("collected fraction must not be NaN");
  if (!(theta_d >= 0.0)) throw DomainError("jitter displacement must be nonnegative");
  if (w <= 0.0) return 0.0;
  const double mass = std::clamp(std::cos(theta_d), 0.0, 1.0);
  const double frac = std::min(w / p.a0, 1.0);
  return std::clamp(mass * std::pow(frac, p.eta_s * p.eta_s), 0.0, 1.0);
}

// Unconditional CDF of the collected fraction under Rayleigh jitter. Carries
// a deficit of about varsigma² just below a0 that collapses in a jump at a0:
// severe jitter collects nothing, so that mass sits at w = 0 instead.
inline double pointing_cdf(double w, const PointingParams& p) {
  p.validate();
  if (std::isnan(w)) throw DomainError("collected fraction must not be NaN");
  if (w < 0.0) return 0.0;
  if (w > p.a0) return 1.0;
  const double vs2 = p.varsigma_rad * p.varsigma_rad;
  return std::pow(w / p.a0, p.eta_s * p.eta_s) * (1.0 - vs2);
}

// One collected-fraction draw: Rayleigh displacement, thinned by the
// misalignment factor, then the in-beam conditional power law.
inline double sample_pointing(const PointingParams& p, Rng& rng) {
  p.validate();
  const double theta_d = rng.rayleigh(p.varsigma_rad);
  const double keep = std::clamp(std::cos(theta_d), 0.0, 1.0);
  const double u = rng.uniform01();
  const double v = rng.uniform01_pos();
  if (u >= keep) return 0.0;
  return p.a0 * std::pow(v, 1.0 / (p.eta_s * p.eta_s));
}

inline double rayleigh_pdf(double theta, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("rayleigh scale must be positive");
  if (theta < 0.0) return 0.0;
  const double s2 = sigma * sigma;
  return theta / s2 * std::exp(-0.5 * theta * theta / s2);
}

}  // namespace orbitlink
