#pragma once

#include "densecvx/point_cloud.hpp"
#include "densecvx/predicates.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace densecvx {

/// Exact convex hull of a finite point set.
///
/// `dimension` is the affine dimension of the input (0..3). `vertices` are
/// the extreme points only, as ascending input indices; points that lie in
/// the relative interior of an edge or facet are never reported.
///
/// For dimension 3, every entry of `facets` is one polytope facet given as a
/// cycle of vertex indices, counter-clockwise seen from outside, starting at
/// its lexicographically smallest point; facets are sorted by that cycle.
/// `triangles` fans each facet from its first vertex. For dimension 2 there
/// is a single facet (the polygon), for dimension < 2 there are none.
struct ConvexHull {
  int dimension = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::array<std::size_t, 3>> triangles;

  std::size_t edge_count() const;
};

ConvexHull convex_hull_3d(std::span<const RationalPoint3> points);
ConvexHull convex_hull_3d(const PointCloud& cloud);
ConvexHull convex_hull_3d(const ScaledPoints& scaled);

}  // namespace densecvx
