#pragma once

#include <cmath>

#include "orbitlink/errors.hpp"

namespace orbitlink {

enum class Provenance { analytic, monte_carlo };

// A probability with its uncertainty pedigree: quadrature results carry no
// interval, Monte Carlo results carry a 95% normal-approximation half-width.
struct ProbabilityEstimate {
  double value = 0.0;
  double ci_half_width = 0.0;
  long long n_trials = 0;
  Provenance provenance = Provenance::analytic;

  double lower95() const { return value - ci_half_width; }
  double upper95() const { return value + ci_half_width; }
};

inline ProbabilityEstimate analytic_estimate(double value) {
  return {value, 0.0, 0, Provenance::analytic};
}

inline ProbabilityEstimate mc_estimate(long long successes, long long n_trials) {
  if (n_trials <= 0) throw DomainError("trial count must be positive");
  if (successes < 0 || successes > n_trials)
    throw DomainError("success count must lie in [0, n_trials]");
  const double p = static_cast<double>(successes) / static_cast<double>(n_trials);
  const double half =
      1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n_trials));
  return {p, half, n_trials, Provenance::monte_carlo};
}

}  // namespace orbitlink
