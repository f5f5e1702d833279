#include <doctest.h>

#include "densecvx/approx.hpp"
#include "densecvx/caps.hpp"
#include "densecvx/geometry_checks.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace densecvx;

namespace {

// Uniform point of the cap, by rejection from its bounding box.
Vec3 sample_in_cap(const SphericalCap& cap, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-cap.R, cap.R);
  for (;;) {
    const Vec3 p{u(rng), u(rng), u(rng)};
    if (cap_contains(cap, cap.center + p)) return cap.center + p;
  }
}

// Points on the boundary circle of the cap's base and on its spherical rim.
std::vector<Vec3> cap_boundary_samples(const SphericalCap& cap, int count) {
  const Vec3 a = std::abs(cap.v.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(cap.v, a));
  const Vec3 e2 = cross(cap.v, e1);
  const double r = std::sqrt(cap.R * cap.R - (cap.R - cap.h) * (cap.R - cap.h));
  std::vector<Vec3> out;
  for (int i = 0; i < count; ++i) {
    const double t = 2 * std::numbers::pi * i / count;
    out.push_back(cap.center + cap.v * (cap.R - cap.h) + (e1 * std::cos(t) + e2 * std::sin(t)) * r);
    out.push_back(cap.center + cap.v * cap.R);
  }
  return out;
}

}  // namespace

TEST_CASE("cap parameters by substitution") {
  const auto p = cap_params(4096, 1.0, 1.0 / 3.0);
  CHECK(p.R == doctest::Approx(16));
  CHECK(p.h == doctest::Approx(0.25));
  CHECK(p.r == doctest::Approx(std::sqrt(7.9375)));
  CHECK(p.packing_lower_bound() == doctest::Approx(32));
  CHECK(std::cos(p.gamma) == doctest::Approx((p.R - p.h) / p.R));

  const auto q = CapParams::from_radius_height(4, 1);
  CHECK(q.r == doctest::Approx(std::sqrt(7.0)));

  CHECK_THROWS_AS(cap_params(4, 1, 1.0 / 3.0), std::invalid_argument);
  CHECK_THROWS_AS(cap_params(64, 0, 1.0 / 3.0), std::invalid_argument);
  CHECK_THROWS_AS(cap_params(64, 1, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(CapParams::from_radius_height(1, 2), std::invalid_argument);
}

TEST_CASE("general tau reproduces the one-third case") {
  for (double n : {64.0, 512.0, 4096.0}) {
    const auto p = cap_params(n, 0.7, 1.0 / 3.0);
    CHECK(p.R == doctest::Approx(0.7 * std::cbrt(n)));
    CHECK(p.h == doctest::Approx(0.7 / std::pow(n, 1.0 / 6.0)));
    CHECK(p.r * p.r == doctest::Approx(p.R * p.R - (p.R - p.h) * (p.R - p.h)));
  }
}

TEST_CASE("cap membership") {
  const SphericalCap cap{{0, 0, 0}, 2, {0, 0, 1}, 0.5};
  CHECK(cap_contains(cap, {0, 0, 1.8}));
  CHECK_FALSE(cap_contains(cap, {0, 0, -2}));
  CHECK_FALSE(cap_contains(cap, {0, 0, 1.4}));
  CHECK_FALSE(cap_contains(cap, {0, 0, 2.1}));
}

TEST_CASE("latitude packing count and certificate") {
  for (double n : {64.0, 512.0, 4096.0}) {
    const auto params = cap_params(n, 1.0, 1.0 / 3.0);
    const auto packing = latitude_packing(params);
    CHECK(static_cast<double>(packing.caps.size()) >= std::sqrt(n) / 2);
    CHECK(static_cast<double>(packing.caps.size()) <= 2 * std::sqrt(n));
    // Independent exhaustive certificate.
    double min_angle = std::numbers::pi;
    for (std::size_t i = 0; i < packing.caps.size(); ++i) {
      CHECK(norm(packing.caps[i].v) == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t j = i + 1; j < packing.caps.size(); ++j)
        min_angle = std::min(min_angle, angle_between(packing.caps[i].v, packing.caps[j].v));
    }
    CHECK(min_angle >= 2 * params.gamma);
    CHECK(packing.min_pairwise_angle == doctest::Approx(min_angle));
  }
  CHECK(latitude_packing(cap_params(4096, 1.0, 1.0 / 3.0)).caps.size() >= 32);
}

TEST_CASE("packing near the polar-angle limit") {
  CHECK_THROWS_AS(latitude_packing(cap_params(8, 1.0, 1.0 / 3.0)), std::invalid_argument);
  const auto p = cap_params(12.5, 1.0, 1.0 / 3.0);
  REQUIRE(p.gamma < std::numbers::pi / 4);
  CHECK(latitude_packing(p).caps.size() >= 1);
}

TEST_CASE("packed caps are disjoint") {
  const auto params = cap_params(512, 1.0, 1.0 / 3.0);
  const auto packing = latitude_packing(params, normalized(Vec3{1, 2, 3}), {5, -1, 2});
  for (std::size_t i = 0; i < packing.caps.size(); ++i) {
    for (const auto& p : cap_boundary_samples(packing.caps[i], 16))
      for (std::size_t j = 0; j < packing.caps.size(); ++j)
        if (j != i) CHECK_FALSE(cap_contains(packing.caps[j], p));
  }
}

TEST_CASE("one point per cap is in convex position") {
  std::mt19937_64 rng(17);
  for (double n : {64.0, 512.0}) {
    const auto packing = latitude_packing(cap_params(n, 1.0, 1.0 / 3.0));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vec3> chosen;
      for (const auto& cap : packing.caps)
        if (rng() % 4 != 0) chosen.push_back(sample_in_cap(cap, rng));
      if (chosen.size() < 4) continue;
      CHECK(is_convex_position(PointCloud::from_vec3(chosen)));
    }
  }
}

TEST_CASE("cap membership is invariant under rigid motion") {
  std::mt19937_64 rng(3);
  const SphericalCap cap{{0, 0, 0}, 3, normalized(Vec3{1, 1, 0}), 0.8};
  for (int i = 0; i < 200; ++i) {
    const RigidMotion m{random_rotation(rng), uniform_in_ball({0, 0, 0}, 10, rng)};
    const Vec3 a = uniform_in_ball({0, 0, 0}, 3.5, rng);
    CHECK(cap_contains(cap, a) == cap_contains(m.apply(cap), m.apply(a)));
  }
}
