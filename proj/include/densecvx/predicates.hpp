#pragma once

#include "densecvx/point.hpp"

#include <span>
#include <vector>

namespace densecvx {

/// Sign of det(b - a, c - a, d - a). Positive when d lies on the side of
/// plane(a, b, c) that the right-handed normal (b - a) x (c - a) points to.
int orient3d(const RationalPoint3& a, const RationalPoint3& b, const RationalPoint3& c,
             const RationalPoint3& d);

/// Sign of the cross product (b - a) x (c - a); +1 for a left turn.
int orient2d(const RationalPoint2& a, const RationalPoint2& b, const RationalPoint2& c);

/// A point with integer coordinates after multiplication by a shared
/// denominator. All exact predicates on clouds run on these.
struct IntPoint3 {
  BigInt x, y, z;
  friend bool operator==(const IntPoint3&, const IntPoint3&) = default;
};

/// The cloud scaled by the least common multiple of all coordinate
/// denominators, so that every predicate reduces to integer arithmetic.
struct ScaledPoints {
  std::vector<IntPoint3> points;
  BigInt denominator{1};
};

ScaledPoints scale_to_integers(std::span<const RationalPoint3> points);

int orient3d(const IntPoint3& a, const IntPoint3& b, const IntPoint3& c, const IntPoint3& d);

/// (b - a) x (c - a).
IntPoint3 plane_normal(const IntPoint3& a, const IntPoint3& b, const IntPoint3& c);
BigInt dot(const IntPoint3& a, const IntPoint3& b);
IntPoint3 operator-(const IntPoint3& a, const IntPoint3& b);
IntPoint3 cross(const IntPoint3& a, const IntPoint3& b);
bool is_zero(const IntPoint3& v);

/// Divides out the gcd of the components; zero stays zero.
IntPoint3 primitive(const IntPoint3& v);

}  // namespace densecvx
