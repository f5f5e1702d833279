#include "densecvx/geometry_checks.hpp"

#include "densecvx/hull.hpp"
#include "densecvx/predicates.hpp"

#include <cmath>
#include <stdexcept>

namespace densecvx {

bool is_convex_position(std::span<const RationalPoint3> points) {
  if (points.empty()) return true;
  return convex_hull_3d(points).vertices.size() == points.size();
}

bool is_convex_position(const PointCloud& cloud) { return is_convex_position(std::span(cloud.points())); }

GeneralPositionReport is_general_position(std::span<const RationalPoint3> points) {
  const ScaledPoints scaled = scale_to_integers(points);
  const auto& p = scaled.points;
  const std::size_t n = p.size();
  GeneralPositionReport report;
  auto fail = [&](std::vector<std::size_t> tuple) {
    report.ok = false;
    report.violation = std::move(tuple);
    return report;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[i] == p[j]) return fail({i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntPoint3 u = p[j] - p[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        const IntPoint3 normal = cross(u, p[k] - p[i]);
        if (is_zero(normal)) return fail({i, j, k});
        const BigInt offset = dot(normal, p[i]);
        for (std::size_t l = k + 1; l < n; ++l) {
          if (dot(normal, p[l]) == offset) return fail({i, j, k, l});
        }
      }
    }
  }
  return report;
}

GeneralPositionReport is_general_position(const PointCloud& cloud) {
  return is_general_position(std::span(cloud.points()));
}

SpreadReport spread(std::span<const RationalPoint3> points) {
  if (points.size() < 2) throw std::invalid_argument("spread needs at least two points");
  const ScaledPoints scaled = scale_to_integers(points);
  const auto& p = scaled.points;
  BigInt lo, hi, d, t;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      t = p[i].x - p[j].x;
      d = t * t;
      t = p[i].y - p[j].y;
      d += t * t;
      t = p[i].z - p[j].z;
      d += t * t;
      if (sgn(d) == 0) {
        throw std::invalid_argument("spread undefined: points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
      }
      if (first || d < lo) lo = d;
      if (first || d > hi) hi = d;
      first = false;
    }
  }
  const BigInt den_sq = scaled.denominator * scaled.denominator;
  SpreadReport r;
  r.min_dist_sq = Rational(lo, den_sq);
  r.min_dist_sq.canonicalize();
  r.max_dist_sq = Rational(hi, den_sq);
  r.max_dist_sq.canonicalize();
  r.spread_sq = Rational(hi, lo);
  r.spread_sq.canonicalize();
  r.normalized_spread = std::sqrt(r.spread_sq.get_d()) / std::cbrt(static_cast<double>(points.size()));
  return r;
}

SpreadReport spread(const PointCloud& cloud) { return spread(std::span(cloud.points())); }

}  // namespace densecvx
