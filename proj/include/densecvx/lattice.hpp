#pragma once

#include "densecvx/point_cloud.hpp"
#include "densecvx/pointset_gen.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace densecvx {

struct OracleResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending indices
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kOracleMaxPoints = 16;

/// Exact maximum convex-position subset by depth-first search over index-
/// ordered subsets. Convex position is hereditary, so a failing subset
/// prunes all its extensions. Throws std::invalid_argument for n > 16.
OracleResult max_convex_subset_exact(const PointCloud& cloud);

struct SubadditivityReport {
  bool holds = false;
  std::size_t whole = 0;          // g(cloud)
  std::size_t sum_of_parts = 0;   // sum of g(part)
};

/// g(cloud) <= sum g(part). Throws unless the parts partition the indices
/// and every part (and the cloud) has at most 16 points.
SubadditivityReport subadditivity_check(const PointCloud& cloud, const std::vector<std::vector<std::size_t>>& partition);

/// gcd of the coordinate differences plus one. Throws if a == b.
std::int64_t lattice_points_on_segment(const LatticePoint3& a, const LatticePoint3& b);

/// Strictly convex hull of planar lattice points, counter-clockwise,
/// starting at the lexicographically smallest vertex.
std::vector<LatticePoint2> lattice_hull_2d(std::vector<LatticePoint2> points);

/// Twice the polygon area.
std::int64_t twice_area(std::span<const LatticePoint2> polygon);

/// Edges carrying more than t lattice points. Throws std::invalid_argument
/// unless the vertices form a strictly convex polygon in either orientation.
std::size_t count_heavy_edges_2d(std::span<const LatticePoint2> polygon, std::int64_t t);

/// Hull of the lattice points inside a random ellipse within [0, m]^2.
std::vector<LatticePoint2> random_convex_lattice_polygon(std::int64_t m, std::uint64_t seed);

struct HullStats {
  int dimension = 0;
  std::size_t vertex_count = 0, edge_count = 0, facet_count = 0;
  Rational volume;
  std::vector<std::int64_t> per_facet_lattice_counts;   // closed facets
  std::vector<std::int64_t> per_facet_interior_counts;  // relative interiors
  std::vector<double> normal_norms;                     // primitive outward normals
  std::int64_t boundary_lattice_count = 0;              // distinct, whole boundary
};

/// Exact hull statistics of integer points. Facet lattice points are
/// enumerated over each facet's bounding box. Lower-dimensional input
/// returns only dimension and vertex count.
HullStats hull_stats(std::span<const LatticePoint3> points);

/// Integer points with 1 <= x^2 + y^2 + z^2 <= M.
std::int64_t r3_sum(std::int64_t M);

/// All integer points with x^2 + y^2 + z^2 <= rho^2.
std::vector<LatticePoint3> lattice_ball(double rho);

struct HullGrowth {
  std::size_t m = 0;
  std::size_t vertex_count = 0;
};

/// Hull vertices of Phi applied to the grid line base + t direction.
/// Throws if the line holds fewer than 2 grid points.
HullGrowth perturbed_line_hull_growth(const PerturbationParams& params, const LatticePoint3& direction,
                                      const LatticePoint3& base);

/// Hull vertices of Phi applied to {p in G : <normal, p> = offset}.
/// Throws if the section holds fewer than 3 grid points.
HullGrowth perturbed_plane_hull_growth(const PerturbationParams& params, const LatticePoint3& normal,
                                       std::int64_t offset);

struct NegligibilityReport {
  std::size_t tetrahedra = 0;      // nondegenerate 4-subsets examined
  std::size_t interior_pairs = 0;  // (S, x) with x strictly inside conv(S)
  std::size_t violations = 0;      // Phi(x) not strictly inside conv(Phi(S))
};

/// Exhaustive over all 4-subsets of G when `samples` is 0, otherwise
/// `samples` random 4-subsets.
NegligibilityReport negligibility_check(const PerturbationParams& params, std::size_t samples, std::uint64_t seed);

}  // namespace densecvx
