#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "orbitlink/montecarlo.hpp"

namespace orbitlink {

// Relay-selection rules compared in the transmission-policy study.
enum class RelayPolicy {
  nearest_to_iot = 1,
  nearest_to_geo = 2,
  nearest_to_direct_line = 3,
};

namespace detail {

// Squared distance from p to the segment ab.
inline double distance_sq_to_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double ab2 = dot(ab, ab);
  if (!(ab2 > 0.0)) {
    const Vec3 pa = p - a;
    return dot(pa, pa);
  }
  const double t = std::clamp(dot(p - a, ab) / ab2, 0.0, 1.0);
  const Vec3 q = a + t * ab;
  const Vec3 pq = p - q;
  return dot(pq, pq);
}

}  // namespace detail

// Index of the relay the policy picks; ties keep the lowest index, an empty
// constellation picks nothing.
inline std::optional<std::size_t> select_relay_index(
    RelayPolicy policy, const std::vector<SphericalPoint>& sats,
    const SphericalPoint& iot, const SphericalPoint& geo) {
  switch (policy) {
    case RelayPolicy::nearest_to_iot:
      return nearest_satellite(sats, iot);
    case RelayPolicy::nearest_to_geo:
      return nearest_satellite(sats, geo);
    case RelayPolicy::nearest_to_direct_line: {
      const Vec3 a = to_cartesian(iot);
      const Vec3 b = to_cartesian(geo);
      std::optional<std::size_t> best{};
      double best_d2 = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < sats.size(); ++i) {
        const double d2 = detail::distance_sq_to_segment(to_cartesian(sats[i]), a, b);
        if (d2 < best_d2) {
          best_d2 = d2;
          best = i;
        }
      }
      return best;
    }
  }
  throw DomainError("unknown relay policy");
}

inline std::optional<SphericalPoint> select_relay(RelayPolicy policy,
                                                  const std::vector<SphericalPoint>& sats,
                                                  const SphericalPoint& iot,
                                                  const SphericalPoint& geo) {
  const auto idx = select_relay_index(policy, sats, iot, geo);
  if (!idx) return std::nullopt;
  return sats[*idx];
}

// Coverage under the chosen policy. Policy 1 reproduces run_coverage_mc
// exactly on the same seed: identical selection rule, identical streams.
inline ProbabilityEstimate policy_coverage_mc(RelayPolicy policy,
                                              const ScenarioConfig& s,
                                              long long n_trials, std::uint64_t seed,
                                              int n_threads = 0) {
  return detail::run_mc(
      s, n_trials, seed, n_threads,
      [policy](const std::vector<SphericalPoint>& sats, const SphericalPoint& iot,
               const SphericalPoint& geo) {
        return select_relay_index(policy, sats, iot, geo);
      },
      [](const TrialOutcome& o) { return o.covered(); });
}

}  // namespace orbitlink
