#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "orbitlink/errors.hpp"

namespace orbitlink {

namespace detail {

// splitmix64 step (Steele, Lea & Flood); used only to expand seeds.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// xoshiro256++ (Blackman & Vigna) with splitmix64 seed expansion.
//
// Streams are cheap to construct, so Monte Carlo code builds one per trial
// from (seed, trial_index); draws then depend only on that pair, never on
// which thread runs the trial.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t sm = seed;
    s_[0] = detail::splitmix64_next(sm);
    s_[1] = detail::splitmix64_next(sm);
    sm ^= 0x2545f4914f6cdd1dULL * stream + (stream << 1 | 1);
    s_[2] = detail::splitmix64_next(sm);
    s_[3] = detail::splitmix64_next(sm);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[3] = 0x9e3779b97f4a7c15ULL;
  }

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial_index) {
    return Rng(seed, trial_index + 1);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53 usable bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); safe as a logarithm argument.
  double uniform01_pos() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    if (!(hi >= lo)) throw DomainError("uniform bounds out of order");
    return lo + (hi - lo) * uniform01();
  }

  // Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair() {
    const double r = std::sqrt(-2.0 * std::log(uniform01_pos()));
    const double phi = 2.0 * std::numbers::pi * uniform01();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  // Gamma(shape, scale) via Marsaglia-Tsang squeeze; shape < 1 is boosted
  // through Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
      throw DomainError("gamma shape and scale must be positive");
    if (shape < 1.0) {
      const double u = uniform01_pos();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = 0.0;
      double v = 0.0;
      do {
        x = normal_pair().first;
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
  }

  double rayleigh(double sigma) {
    if (!(sigma > 0.0)) throw DomainError("rayleigh scale must be positive");
    return sigma * std::sqrt(-2.0 * std::log(uniform01_pos()));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace orbitlink
