#pragma once

#include "densecvx/rational.hpp"
#include "densecvx/vec3.hpp"

#include <compare>
#include <cstdint>

namespace densecvx {

struct RationalPoint3 {
  Rational x, y, z;

  RationalPoint3() = default;
  RationalPoint3(Rational x_, Rational y_, Rational z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  RationalPoint3(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

  Vec3 to_vec3() const { return {x.get_d(), y.get_d(), z.get_d()}; }

  friend bool operator==(const RationalPoint3& a, const RationalPoint3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  /// Lexicographic on (x, y, z).
  friend std::strong_ordering operator<=>(const RationalPoint3& a, const RationalPoint3& b);
};

RationalPoint3 rational_from_vec3(const Vec3& v);

struct RationalPoint2 {
  Rational x, y;

  friend bool operator==(const RationalPoint2& a, const RationalPoint2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Integer lattice point, used for grid and lattice-polytope work.
struct LatticePoint3 {
  std::int64_t x = 0, y = 0, z = 0;

  friend auto operator<=>(const LatticePoint3&, const LatticePoint3&) = default;
  RationalPoint3 to_rational() const { return RationalPoint3(x, y, z); }
};

struct LatticePoint2 {
  std::int64_t x = 0, y = 0;
  friend auto operator<=>(const LatticePoint2&, const LatticePoint2&) = default;
};

}  // namespace densecvx
