#include "densecvx/lattice.hpp"

#include "densecvx/hull.hpp"
#include "densecvx/predicates.hpp"
#include "densecvx/random.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace densecvx {

namespace {

std::size_t perturbed_hull_vertices(const PerturbationParams& params, std::span<const LatticePoint3> grid) {
  return convex_hull_3d(phi_perturb_all(grid, params)).vertices.size();
}

std::int64_t orient_int(const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& c, const LatticePoint3& d) {
  const std::int64_t ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  const std::int64_t vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  const std::int64_t wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;
  const std::int64_t det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
  return (det > 0) - (det < 0);
}

// x strictly inside the tetrahedron t: on the same side of every face as
// the opposite vertex.
template <class P, class Orient>
bool strictly_inside(const std::array<P, 4>& t, const P& x, Orient orient) {
  static constexpr int faces[4][4] = {{1, 2, 3, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}};
  for (const auto& f : faces) {
    const auto want = orient(t[f[0]], t[f[1]], t[f[2]], t[f[3]]);
    if (orient(t[f[0]], t[f[1]], t[f[2]], x) != want) return false;
  }
  return true;
}

}  // namespace

HullGrowth perturbed_line_hull_growth(const PerturbationParams& params, const LatticePoint3& direction,
                                      const LatticePoint3& base) {
  const auto line = grid_line_subset(params.k, direction, base);
  if (line.size() < 2) throw std::invalid_argument("grid line holds fewer than 2 points");
  return {line.size(), perturbed_hull_vertices(params, line)};
}

HullGrowth perturbed_plane_hull_growth(const PerturbationParams& params, const LatticePoint3& normal,
                                       std::int64_t offset) {
  const auto plane = grid_plane_subset(params.k, normal, offset);
  if (plane.size() < 3) throw std::invalid_argument("grid plane section holds fewer than 3 points");
  return {plane.size(), perturbed_hull_vertices(params, plane)};
}

NegligibilityReport negligibility_check(const PerturbationParams& params, std::size_t samples, std::uint64_t seed) {
  const auto grid = grid_points(params.k);
  const ScaledPoints image = scale_to_integers(phi_perturb_all(grid, params));
  const std::size_t n = grid.size();
  NegligibilityReport report;

  auto examine = [&](const std::array<std::size_t, 4>& ids) {
    const std::array<LatticePoint3, 4> t{grid[ids[0]], grid[ids[1]], grid[ids[2]], grid[ids[3]]};
    if (orient_int(t[0], t[1], t[2], t[3]) == 0) return;
    ++report.tetrahedra;
    const std::array<IntPoint3, 4> ti{image.points[ids[0]], image.points[ids[1]], image.points[ids[2]],
                                      image.points[ids[3]]};
    for (std::size_t x = 0; x < n; ++x) {
      if (!strictly_inside(t, grid[x], orient_int)) continue;
      ++report.interior_pairs;
      auto exact = [](const IntPoint3& a, const IntPoint3& b, const IntPoint3& c, const IntPoint3& d) {
        return orient3d(a, b, c, d);
      };
      if (!strictly_inside(ti, image.points[x], exact)) ++report.violations;
    }
  };

  if (samples == 0) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) examine({a, b, c, d});
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::array<std::size_t, 4> ids{};
    for (;;) {
      for (auto& id : ids) id = pick(rng);
      if (ids[0] != ids[1] && ids[0] != ids[2] && ids[0] != ids[3] && ids[1] != ids[2] && ids[1] != ids[3] &&
          ids[2] != ids[3]) {
        break;
      }
    }
    examine(ids);
  }
  return report;
}

}  // namespace densecvx
