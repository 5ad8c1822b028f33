#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "orbitlink/constellation.hpp"
#include "orbitlink/quadrature.hpp"
#include "orbitlink/rng.hpp"

using namespace orbitlink;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("constellation config validation") {
  ConstellationConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  ConstellationConfig negative = cfg;
  negative.n_leo = -1;
  CHECK_THROWS_AS(negative.validate(), ValidationError);

  ConstellationConfig sunk = cfg;
  sunk.shell_radius_km = 6000.0;
  CHECK_THROWS_AS(sunk.validate(), ValidationError);

  ConstellationConfig beyond = cfg;
  beyond.shell_radius_km = 40000.0;
  CHECK_THROWS_AS(beyond.validate(), ValidationError);
}

TEST_CASE("sampling places every satellite on the shell") {
  ConstellationConfig cfg;
  cfg.n_leo = 5000;
  Rng rng(11);
  const auto sats = sample_constellation(cfg, rng);
  REQUIRE(sats.size() == 5000);
  for (const auto& s : sats) {
    CHECK(s.radius_km == cfg.shell_radius_km);
    CHECK(s.polar_rad >= 0.0);
    CHECK(s.polar_rad <= kPi);
    CHECK(s.azimuth_rad >= 0.0);
    CHECK(s.azimuth_rad < 2.0 * kPi);
  }

  cfg.n_leo = 0;
  CHECK(sample_constellation(cfg, rng).empty());
}

TEST_CASE("sampling is uniform over the sphere") {
  ConstellationConfig cfg;
  cfg.n_leo = 1000000;
  Rng rng(7);
  std::vector<SphericalPoint> sats;
  sample_constellation_into(cfg, rng, sats);

  // A polar cap of half-angle pi/3 holds (1 - cos(pi/3))/2 = 1/4 of the area.
  const double cap_cos = std::cos(kPi / 3.0);
  long long in_cap = 0;
  double cos_sum = 0.0;
  double az_sum = 0.0;
  for (const auto& s : sats) {
    const double c = std::cos(s.polar_rad);
    if (c > cap_cos) ++in_cap;
    cos_sum += c;
    az_sum += s.azimuth_rad;
  }
  const double n = static_cast<double>(cfg.n_leo);
  const double cap_frac = static_cast<double>(in_cap) / n;
  CHECK(std::abs(cap_frac - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / n));
  // cos(polar) is uniform on [-1, 1]: mean 0, sd 1/sqrt(3).
  CHECK(std::abs(cos_sum / n) < 3.0 / std::sqrt(3.0 * n));
  // Azimuth is uniform on [0, 2pi): mean pi, sd 2pi/sqrt(12).
  CHECK(std::abs(az_sum / n - kPi) < 3.0 * 2.0 * kPi / std::sqrt(12.0 * n));
}

TEST_CASE("nearest satellite matches brute force and breaks ties low") {
  const SphericalPoint target(6371.0, 0.4, 1.0);
  CHECK(!nearest_satellite({}, target).has_value());

  std::vector<SphericalPoint> sats;
  sats.emplace_back(7371.0, 2.0, 0.3);
  sats.emplace_back(7371.0, 0.5, 1.1);
  sats.emplace_back(7371.0, 1.4, 4.0);
  const auto best = nearest_satellite(sats, target);
  REQUIRE(best.has_value());
  CHECK(*best == 1);

  // Exact duplicate of the winner appended later must not displace it.
  sats.push_back(sats[1]);
  CHECK(*nearest_satellite(sats, target) == 1);

  Rng rng(21);
  ConstellationConfig cfg;
  cfg.n_leo = 200;
  for (int round = 0; round < 50; ++round) {
    const auto cloud = sample_constellation(cfg, rng);
    const auto got = nearest_satellite(cloud, target);
    std::size_t want = 0;
    for (std::size_t i = 1; i < cloud.size(); ++i)
      if (central_angle(target, cloud[i]) < central_angle(target, cloud[want]))
        want = i;
    REQUIRE(got.has_value());
    CHECK(*got == want);
  }
}

TEST_CASE("contact angle CDF edge values") {
  CHECK(contact_angle_cdf(0.0, 100) == 0.0);
  CHECK(contact_angle_cdf(kPi, 100) == Catch::Approx(1.0));
  CHECK(contact_angle_cdf(1.0, 0) == 0.0);
  CHECK(contact_angle_cdf(kPi, 0) == 0.0);
  // One satellite: cap-area fraction (1 - cos θ)/2.
  for (double theta : {0.3, 1.0, 2.0})
    CHECK(contact_angle_cdf(theta, 1) ==
          Catch::Approx(0.5 * (1.0 - std::cos(theta))).epsilon(1e-12));
  CHECK(contact_angle_cdf(0.5, 1000) ==
        Catch::Approx(1.0 - std::pow(0.5 * (1.0 + std::cos(0.5)), 1000.0))
            .epsilon(1e-9));
  CHECK_THROWS_AS(contact_angle_cdf(-0.1, 10), DomainError);
  CHECK_THROWS_AS(contact_angle_cdf(kPi + 0.1, 10), DomainError);
  CHECK_THROWS_AS(contact_angle_cdf(1.0, -1), DomainError);
}

TEST_CASE("contact angle PDF differentiates the CDF") {
  for (long long n : {1LL, 10LL, 1000LL}) {
    for (double theta = 0.05; theta < kPi; theta += 0.15) {
      const double h = 1e-6;
      const double want =
          (contact_angle_cdf(theta + h, n) - contact_angle_cdf(theta - h, n)) /
          (2.0 * h);
      CHECK(contact_angle_pdf(theta, n) ==
            Catch::Approx(want).epsilon(1e-6).margin(1e-9));
    }
    // The density concentrates near zero for large n; split the range there
    // so the integrator's initial samples land on the peak.
    const double split = std::min(kPi, 4.0 / std::sqrt(static_cast<double>(n)));
    const double mass =
        integrate_adaptive([&](double t) { return contact_angle_pdf(t, n); }, 0.0,
                           split) +
        integrate_adaptive([&](double t) { return contact_angle_pdf(t, n); }, split,
                           kPi);
    CHECK(mass == Catch::Approx(1.0).epsilon(1e-9));
  }
  CHECK(contact_angle_pdf(1.0, 0) == 0.0);
  CHECK_THROWS_AS(contact_angle_pdf(-0.1, 10), DomainError);
}

TEST_CASE("first-hop availability for the default shell") {
  ConstellationConfig cfg;
  const double theta_max = max_central_angle(6371.0, 7371.0, 3000.0);
  CHECK(availability_ill(cfg, 3000.0) ==
        Catch::Approx(contact_angle_cdf(theta_max, 1000)).epsilon(1e-12));

  cfg.n_leo = 0;
  CHECK(availability_ill(cfg, 3000.0) == 0.0);

  cfg.n_leo = 1000;
  const double ceiling = std::sqrt(7371.0 * 7371.0 - 6371.0 * 6371.0);
  CHECK(availability_ill(cfg, ceiling) ==
        Catch::Approx(contact_angle_cdf(std::acos(6371.0 / 7371.0), 1000))
            .epsilon(1e-12));
  CHECK_THROWS_AS(availability_ill(cfg, ceiling * 1.01), DomainError);
  // Range shorter than the shell gap cannot reach any satellite.
  CHECK_THROWS_AS(availability_ill(cfg, 500.0), DomainError);
}

TEST_CASE("first-hop availability matches direct simulation") {
  ConstellationConfig cfg;
  cfg.n_leo = 100;
  const double l_max = 3000.0;
  const double want = availability_ill(cfg, l_max);
  const SphericalPoint device(6371.0, 0.0, 0.0);
  Rng rng(606);
  const int trials = 200000;
  int hits = 0;
  std::vector<SphericalPoint> sats;
  for (int t = 0; t < trials; ++t) {
    sample_constellation_into(cfg, rng, sats);
    const auto best = nearest_satellite(sats, device);
    if (best && euclidean_distance(device, sats[*best]) <= l_max) ++hits;
  }
  const double got = static_cast<double>(hits) / trials;
  CHECK(std::abs(got - want) < 3.0 * std::sqrt(want * (1.0 - want) / trials));
}

TEST_CASE("azimuth reach covers its three branches") {
  const double r_shell = 7371.0;
  const double r_geo = 35860.0;
  const double big_theta = kPi / 4.0;

  // Even the coplanar near side is out of range.
  CHECK(azimuth_range_within(big_theta, big_theta, r_shell, r_geo, 100.0) == 0.0);
  // The far side is still within range.
  const double d_far = chord_length(r_shell, r_geo, std::cos(0.2 + big_theta));
  CHECK(azimuth_range_within(0.2, big_theta, r_shell, r_geo, d_far) == kPi);
  CHECK(azimuth_range_within(0.2, big_theta, r_shell, r_geo, d_far * 1.001) == kPi);

  // Interior branch: the bounding azimuth puts the chord exactly at l_max.
  const double theta = 0.3;
  const double l_mid = 0.5 * (chord_length(r_shell, r_geo, std::cos(theta - big_theta)) +
                              chord_length(r_shell, r_geo, std::cos(theta + big_theta)));
  const double phi = azimuth_range_within(theta, big_theta, r_shell, r_geo, l_mid);
  CHECK(phi > 0.0);
  CHECK(phi < kPi);
  const SphericalPoint sat(r_shell, theta, phi);
  const SphericalPoint geo(r_geo, big_theta, 0.0);
  CHECK(euclidean_distance(sat, geo) == Catch::Approx(l_mid).epsilon(1e-9));

  // Inside the limit the chord is shorter, outside it is longer.
  CHECK(euclidean_distance(SphericalPoint(r_shell, theta, 0.9 * phi), geo) < l_mid);
  CHECK(euclidean_distance(SphericalPoint(r_shell, theta, std::min(phi * 1.1, kPi)),
                           geo) > l_mid);
}

TEST_CASE("azimuth reach rejects collapsed interior geometry") {
  // With the target nearly on the axis the near and far chords almost
  // coincide; a range between them hits the interior branch with no usable
  // azimuth resolution, which must refuse rather than fabricate an answer.
  const double r_shell = 7371.0;
  const double r_geo = 35860.0;
  const double theta = 0.3;
  const double tiny = 3e-15;
  const double d_near = chord_length(r_shell, r_geo, std::cos(theta - tiny));
  const double d_far = chord_length(r_shell, r_geo, std::cos(theta + tiny));
  REQUIRE(d_far > d_near);
  const double between = std::nextafter(d_far, 0.0);
  REQUIRE(between >= d_near);
  CHECK_THROWS_AS(azimuth_range_within(theta, tiny, r_shell, r_geo, between),
                  DegenerateGeometry);
  CHECK_THROWS_AS(azimuth_range_within(0.3, 0.2, r_shell, -1.0, 1000.0), DomainError);
  CHECK_THROWS_AS(azimuth_range_within(-0.1, 0.2, r_shell, r_geo, 1000.0), DomainError);
  CHECK_THROWS_AS(azimuth_range_within(0.3, 4.0, r_shell, r_geo, 1000.0), DomainError);
  CHECK_THROWS_AS(azimuth_range_within(0.3, 0.2, r_shell, r_geo, -1.0), DomainError);
}

TEST_CASE("azimuth reach agrees with a direct distance scan") {
  Rng rng(1212);
  const double r_shell = 7371.0;
  const double r_geo = 35860.0;
  for (int round = 0; round < 200; ++round) {
    const double theta = rng.uniform(0.05, kPi - 0.05);
    const double big_theta = rng.uniform(0.05, kPi - 0.05);
    const double d_near = chord_length(r_shell, r_geo, std::cos(theta - big_theta));
    const double d_far = chord_length(r_shell, r_geo, std::cos(theta + big_theta));
    const double l_max = d_near + rng.uniform01() * (d_far - d_near);
    const double phi = azimuth_range_within(theta, big_theta, r_shell, r_geo, l_max);
    const SphericalPoint geo(r_geo, big_theta, 0.0);
    // Scan azimuths and compare reachability against the reported boundary.
    for (int k = 0; k <= 40; ++k) {
      const double az = kPi * k / 40.0;
      const bool within =
          euclidean_distance(SphericalPoint(r_shell, theta, az), geo) <= l_max;
      if (az < phi - 1e-9) CHECK(within);
      if (az > phi + 1e-9) CHECK(!within);
    }
  }
}

TEST_CASE("second-hop conditional availability is the azimuth fraction") {
  ConstellationConfig cfg;
  const double big_theta = kPi / 4.0;
  const double l_lg = 35000.0;
  const double theta = 0.3;
  CHECK(conditional_lgl_availability(theta, cfg, big_theta, l_lg) ==
        Catch::Approx(azimuth_range_within(theta, big_theta, cfg.shell_radius_km,
                                           cfg.geometry.geo_radius_km, l_lg) /
                      kPi)
            .epsilon(1e-15));
  // A ceiling-level range leaves every azimuth usable.
  const double ceiling = 2.0 * std::sqrt(35860.0 * 35860.0 - 7371.0 * 7371.0);
  CHECK(conditional_lgl_availability(theta, cfg, big_theta, ceiling) == 1.0);
}
