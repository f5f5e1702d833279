#include "densecvx/approx.hpp"
#include "densecvx/random.hpp"

#include <cmath>
#include <numbers>

namespace densecvx {

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Vec3 rotate(const Quaternion& q, const Vec3& v) {
  const Vec3 u{q.x, q.y, q.z};
  const Vec3 t = cross(u, v) * 2.0;
  return v + t * q.w + cross(u, t);
}

Quaternion random_rotation(std::mt19937_64& rng) {
  const double u1 = unit_double(rng()), u2 = unit_double(rng()), u3 = unit_double(rng());
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const double t2 = 2 * std::numbers::pi * u2, t3 = 2 * std::numbers::pi * u3;
  Quaternion q{b * std::cos(t3), a * std::sin(t2), a * std::cos(t2), b * std::sin(t3)};
  const double n = q.norm();
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

SphericalCap RigidMotion::apply(const SphericalCap& cap) const {
  return {apply(cap.center), cap.R, apply_direction(cap.v), cap.h};
}

Vec3 uniform_in_ball(const Vec3& center, double radius, std::mt19937_64& rng) {
  for (;;) {
    const Vec3 p{2 * unit_double(rng()) - 1, 2 * unit_double(rng()) - 1, 2 * unit_double(rng()) - 1};
    if (norm_sq(p) <= 1.0) return center + p * radius;
  }
}

Vec3 uniform_on_sphere(std::mt19937_64& rng) {
  for (;;) {
    const Vec3 p{2 * unit_double(rng()) - 1, 2 * unit_double(rng()) - 1, 2 * unit_double(rng()) - 1};
    const double s = norm_sq(p);
    if (s <= 1.0 && s > 1e-12) return p * (1.0 / std::sqrt(s));
  }
}

RigidMotion random_congruence(const Vec3& center, double R, std::mt19937_64& rng) {
  RigidMotion m;
  m.rotation = random_rotation(rng);
  m.translation = uniform_in_ball(center, 2.0 * R, rng);
  return m;
}

}  // namespace densecvx
