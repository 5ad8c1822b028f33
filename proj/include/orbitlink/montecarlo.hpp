#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "orbitlink/analysis.hpp"
#include "orbitlink/estimate.hpp"

namespace orbitlink {

// Everything one simulated constellation draw decided. Fade gates are only
// evaluated when both range gates pass, so covered() implies available().
struct TrialOutcome {
  bool relay_found = false;
  bool ill_available = false;
  bool lgl_available = false;
  bool ill_covered = false;
  bool lgl_covered = false;
  std::optional<SphericalPoint> relay{};

  bool available() const { return relay_found && ill_available && lgl_available; }
  bool covered() const { return available() && ill_covered && lgl_covered; }
};

namespace detail {

// One constellation draw under an arbitrary relay-selection rule. The RNG
// must be the trial's own stream; draws happen in a fixed order so outcomes
// depend only on (seed, trial index).
template <class Select>
TrialOutcome run_trial_with(const ScenarioConfig& s, Select&& select, Rng& rng,
                            std::vector<SphericalPoint>& scratch) {
  sample_constellation_into(s.constellation, rng, scratch);
  TrialOutcome out;
  const SphericalPoint iot = s.iot_position();
  const SphericalPoint geo = s.geo_position();
  const auto idx = select(scratch, iot, geo);
  if (!idx) return out;
  out.relay_found = true;
  out.relay = scratch[*idx];
  const double l_il = euclidean_distance(iot, scratch[*idx]);
  const double l_lg = euclidean_distance(scratch[*idx], geo);
  out.ill_available = l_il <= s.ill.l_max_km;
  out.lgl_available = l_lg <= s.lgl.l_max_km;
  if (!out.available()) return out;
  const double w_il = sample_sr(s.ill_fading, rng);
  const double w_lg = sample_pointing(s.lgl_pointing, rng);
  out.ill_covered = w_il > s.ill.required_fade(l_il);
  out.lgl_covered = w_lg > s.lgl.required_fade(l_lg);
  return out;
}

inline int resolve_worker_count(int n_threads) {
  if (n_threads < 0) throw DomainError("thread count must be nonnegative");
  if (n_threads > 0) return n_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Counts trials satisfying `pred` over a statically chunked trial range.
// Workers accumulate integer counts, so the estimate is bit-identical for
// every worker count.
template <class Select, class Pred>
ProbabilityEstimate run_mc(const ScenarioConfig& s, long long n_trials,
                           std::uint64_t seed, int n_threads, Select select,
                           Pred pred) {
  s.validate();
  if (n_trials <= 0) throw DomainError("trial count must be positive");
  const int workers = resolve_worker_count(n_threads);
  const long long chunk = (n_trials + workers - 1) / workers;
  std::vector<long long> counts(static_cast<std::size_t>(workers), 0);
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        std::vector<SphericalPoint> scratch;
        long long local = 0;
        const long long lo = static_cast<long long>(t) * chunk;
        const long long hi = std::min(n_trials, lo + chunk);
        for (long long i = lo; i < hi; ++i) {
          Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(i));
          if (pred(run_trial_with(s, select, rng, scratch))) ++local;
        }
        counts[static_cast<std::size_t>(t)] = local;
      } catch (...) {
        failures[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  long long successes = 0;
  for (long long c : counts) successes += c;
  return mc_estimate(successes, n_trials);
}

inline auto nearest_to_iot_selector() {
  return [](const std::vector<SphericalPoint>& sats, const SphericalPoint& iot,
            const SphericalPoint&) { return nearest_satellite(sats, iot); };
}

}  // namespace detail

// One trial under the baseline rule (relay = satellite nearest the device).
inline TrialOutcome run_trial(const ScenarioConfig& s, Rng& rng) {
  s.validate();
  std::vector<SphericalPoint> scratch;
  return detail::run_trial_with(s, detail::nearest_to_iot_selector(), rng, scratch);
}

inline ProbabilityEstimate run_availability_mc(const ScenarioConfig& s,
                                               long long n_trials, std::uint64_t seed,
                                               int n_threads = 0) {
  return detail::run_mc(s, n_trials, seed, n_threads,
                        detail::nearest_to_iot_selector(),
                        [](const TrialOutcome& o) { return o.available(); });
}

inline ProbabilityEstimate run_coverage_mc(const ScenarioConfig& s, long long n_trials,
                                           std::uint64_t seed, int n_threads = 0) {
  return detail::run_mc(s, n_trials, seed, n_threads,
                        detail::nearest_to_iot_selector(),
                        [](const TrialOutcome& o) { return o.covered(); });
}

// True when single-threaded and maximally threaded runs of the same seeded
// estimate agree bit for bit.
inline bool reproducibility_check(const ScenarioConfig& s, std::uint64_t seed) {
  constexpr long long trials = 2000;
  const ProbabilityEstimate serial = run_coverage_mc(s, trials, seed, 1);
  const int wide = std::max(2, detail::resolve_worker_count(0));
  const ProbabilityEstimate threaded = run_coverage_mc(s, trials, seed, wide);
  const ProbabilityEstimate threaded_again = run_coverage_mc(s, trials, seed, wide);
  return serial.value == threaded.value &&
         serial.ci_half_width == threaded.ci_half_width &&
         threaded.value == threaded_again.value &&
         threaded.ci_half_width == threaded_again.ci_half_width;
}

}  // namespace orbitlink
