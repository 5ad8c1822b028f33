#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "orbitlink/errors.hpp"

namespace orbitlink {

struct QuadratureControl {
  double rel_tolerance = 1e-10;
  double abs_tolerance = 1e-13;
  int max_subdivisions = 48;

  void validate() const {
    if (!(rel_tolerance > 0.0) || !(abs_tolerance > 0.0))
      throw ValidationError("quadrature tolerances must be positive");
    if (max_subdivisions < 8)
      throw ValidationError("quadrature max_subdivisions must be at least 8");
  }
};

namespace detail {

template <class F>
double adaptive_simpson(F& f, double a, double fa, double b, double fb, double m,
                        double fm, double whole, double tol, int depth_left,
                        int& floor_budget) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol) return left + right + err;
  // A panel within a few hundred ulp of the coordinate grid cannot move the
  // total; accept it rather than chase round-off noise to the depth limit.
  // Isolated edge chains need a handful of these, so a spent budget means the
  // tolerance is unreachable across the whole range, not just at one seam.
  if (b - a <= 1024.0 * std::numeric_limits<double>::epsilon() *
                   (std::abs(a) + std::abs(b))) {
    if (--floor_budget < 0)
      throw QuadratureError("adaptive quadrature tolerance unreachable across the integration range");
    return left + right + err;
  }
  if (depth_left <= 0)
    throw QuadratureError("adaptive quadrature tolerance unreachable at maximum subdivision depth");
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth_left - 1,
                          floor_budget) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth_left - 1,
                          floor_budget);
}

// Legendre nodes and weights on [-1, 1], found by Newton iteration on P_n.
struct GaussLegendre64 {
  static constexpr int n = 64;
  std::array<double, n> node{};
  std::array<double, n> weight{};

  GaussLegendre64() {
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 64; ++iter) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      node[i] = -x;
      node[n - 1 - i] = x;
      weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
  }
};

inline const GaussLegendre64& gl64() {
  static const GaussLegendre64 table;
  return table;
}

}  // namespace detail

// Adaptive Simpson integral of f over [a, b]. The tolerance is
// max(abs_tolerance, rel_tolerance * |coarse estimate|), refined per panel.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadratureControl& ctl = {}) {
  ctl.validate();
  if (!(b >= a)) throw DomainError("integration bounds out of order");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = std::max(ctl.abs_tolerance, ctl.rel_tolerance * std::abs(whole));
  int floor_budget = 4096;
  return detail::adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol,
                                  ctl.max_subdivisions, floor_budget);
}

// Fixed 64-point Gauss-Legendre rule over [a, b]; exact for polynomials of
// degree 127, ample for the smooth azimuth integrands used here.
template <class F>
double gauss_legendre_64(F&& f, double a, double b) {
  if (!(b >= a)) throw DomainError("integration bounds out of order");
  if (a == b) return 0.0;
  const auto& t = detail::gl64();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < detail::GaussLegendre64::n; ++i)
    sum += t.weight[i] * f(mid + half * t.node[i]);
  return half * sum;
}

}  // namespace orbitlink
