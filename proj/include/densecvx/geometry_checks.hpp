#pragma once

#include "densecvx/point_cloud.hpp"

#include <optional>
#include <span>
#include <vector>

namespace densecvx {

/// True iff every point is a vertex of the hull. Repeated points make the
/// span overload return false.
bool is_convex_position(const PointCloud& cloud);
bool is_convex_position(std::span<const RationalPoint3> points);

struct GeneralPositionReport {
  bool ok = true;
  /// Indices of the first offending tuple: 2 equal, 3 collinear or 4 coplanar.
  std::vector<std::size_t> violation;
};

/// Exhaustive O(n^4) check; desk scale only.
GeneralPositionReport is_general_position(const PointCloud& cloud);
GeneralPositionReport is_general_position(std::span<const RationalPoint3> points);

struct SpreadReport {
  Rational min_dist_sq;
  Rational max_dist_sq;
  Rational spread_sq;        // max_dist_sq / min_dist_sq, >= 1
  double normalized_spread;  // sqrt(spread_sq) / n^{1/3}
};

/// Throws std::invalid_argument for fewer than two points or repeated points.
SpreadReport spread(const PointCloud& cloud);
SpreadReport spread(std::span<const RationalPoint3> points);

}  // namespace densecvx
