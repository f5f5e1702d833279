#include "densecvx/predicates.hpp"

namespace densecvx {

std::strong_ordering operator<=>(const RationalPoint3& a, const RationalPoint3& b) {
  if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a.y, b.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a.z, b.z); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RationalPoint3 rational_from_vec3(const Vec3& v) {
  return {rational_from_double(v.x), rational_from_double(v.y), rational_from_double(v.z)};
}

int orient3d(const RationalPoint3& a, const RationalPoint3& b, const RationalPoint3& c,
             const RationalPoint3& d) {
  Rational ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  Rational vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  Rational wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;
  Rational det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
  return sgn(det);
}

int orient2d(const RationalPoint2& a, const RationalPoint2& b, const RationalPoint2& c) {
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

ScaledPoints scale_to_integers(std::span<const RationalPoint3> points) {
  ScaledPoints out;
  BigInt lcm{1};
  for (const auto& p : points) {
    for (const Rational* q : {&p.x, &p.y, &p.z}) {
      if (q->get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q->get_den_mpz_t());
    }
  }
  out.denominator = lcm;
  out.points.reserve(points.size());
  auto scale = [&](const Rational& q) {
    BigInt r = lcm / q.get_den();
    return BigInt(r * q.get_num());
  };
  for (const auto& p : points) out.points.push_back({scale(p.x), scale(p.y), scale(p.z)});
  return out;
}

IntPoint3 operator-(const IntPoint3& a, const IntPoint3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

IntPoint3 cross(const IntPoint3& a, const IntPoint3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BigInt dot(const IntPoint3& a, const IntPoint3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

bool is_zero(const IntPoint3& v) { return sgn(v.x) == 0 && sgn(v.y) == 0 && sgn(v.z) == 0; }

IntPoint3 plane_normal(const IntPoint3& a, const IntPoint3& b, const IntPoint3& c) {
  return cross(b - a, c - a);
}

int orient3d(const IntPoint3& a, const IntPoint3& b, const IntPoint3& c, const IntPoint3& d) {
  return sgn(dot(plane_normal(a, b, c), d - a));
}

IntPoint3 primitive(const IntPoint3& v) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.z.get_mpz_t());
  if (g == 0 || g == 1) return v;
  return {v.x / g, v.y / g, v.z / g};
}

}  // namespace densecvx
