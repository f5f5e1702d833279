#include "densecvx/lattice.hpp"

#include "densecvx/hull.hpp"
#include "densecvx/predicates.hpp"
#include "densecvx/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace densecvx {

std::int64_t lattice_points_on_segment(const LatticePoint3& a, const LatticePoint3& b) {
  if (a == b) throw std::invalid_argument("segment endpoints must differ");
  const std::int64_t g = std::gcd(std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y)), std::abs(b.z - a.z));
  return g + 1;
}

namespace {

std::int64_t turn(const LatticePoint2& o, const LatticePoint2& a, const LatticePoint2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<LatticePoint2> lattice_hull_2d(std::vector<LatticePoint2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<LatticePoint2> chain;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = chain.size();
    for (const auto& p : points) {
      while (chain.size() >= base + 2 && turn(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
      chain.push_back(p);
    }
    chain.pop_back();
    std::reverse(points.begin(), points.end());
  }
  return chain;
}

std::int64_t twice_area(std::span<const LatticePoint2> polygon) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % polygon.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return std::abs(s);
}

std::size_t count_heavy_edges_2d(std::span<const LatticePoint2> polygon, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("heavy-edge threshold needs t >= 1");
  const std::size_t n = polygon.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t s = turn(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]);
    const int sg = (s > 0) - (s < 0);
    if (sg == 0 || (sign != 0 && sg != sign)) throw std::invalid_argument("polygon is not strictly convex");
    sign = sg;
  }
  if (lattice_hull_2d({polygon.begin(), polygon.end()}).size() != n) {
    throw std::invalid_argument("polygon is not simple");
  }
  std::size_t heavy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % n];
    if (lattice_points_on_segment({a.x, a.y, 0}, {b.x, b.y, 0}) > t) ++heavy;
  }
  return heavy;
}

std::vector<LatticePoint2> random_convex_lattice_polygon(std::int64_t m, std::uint64_t seed) {
  if (m < 4) throw std::invalid_argument("polygon box needs m >= 4");
  std::mt19937_64 rng(seed);
  const double half = static_cast<double>(m) / 2.0;
  for (;;) {
    const double a = half * (0.3 + 0.7 * unit_double(rng()));
    const double b = half * (0.3 + 0.7 * unit_double(rng()));
    const double theta = std::numbers::pi * unit_double(rng());
    const double ct = std::cos(theta), st = std::sin(theta);
    std::vector<LatticePoint2> inside;
    for (std::int64_t x = 0; x <= m; ++x) {
      for (std::int64_t y = 0; y <= m; ++y) {
        const double dx = x - half, dy = y - half;
        const double u = (dx * ct + dy * st) / a, v = (-dx * st + dy * ct) / b;
        if (u * u + v * v <= 1.0) inside.push_back({x, y});
      }
    }
    auto hull = lattice_hull_2d(std::move(inside));
    if (hull.size() >= 3) return hull;
  }
}

HullStats hull_stats(std::span<const LatticePoint3> points) {
  std::vector<RationalPoint3> rational;
  rational.reserve(points.size());
  for (const auto& p : points) rational.push_back(p.to_rational());
  const ConvexHull hull = convex_hull_3d(rational);

  HullStats stats;
  stats.dimension = hull.dimension;
  stats.vertex_count = hull.vertices.size();
  if (hull.dimension < 3) return stats;
  stats.edge_count = hull.edge_count();
  stats.facet_count = hull.facets.size();

  BigInt six_volume = 0;
  auto lp = [&](std::size_t i) { return points[i]; };
  for (const auto& tri : hull.triangles) {
    const auto a = lp(tri[0]), b = lp(tri[1]), c = lp(tri[2]);
    const IntPoint3 A{a.x, a.y, a.z}, B{b.x, b.y, b.z}, C{c.x, c.y, c.z};
    six_volume += dot(A, cross(B, C));
  }
  stats.volume = Rational(six_volume, 6);
  stats.volume.canonicalize();

  std::set<LatticePoint3> boundary;
  for (const auto& facet : hull.facets) {
    const auto v0 = lp(facet[0]), v1 = lp(facet[1]), v2 = lp(facet[2]);
    std::int64_t n[3] = {(v1.y - v0.y) * (v2.z - v0.z) - (v1.z - v0.z) * (v2.y - v0.y),
                         (v1.z - v0.z) * (v2.x - v0.x) - (v1.x - v0.x) * (v2.z - v0.z),
                         (v1.x - v0.x) * (v2.y - v0.y) - (v1.y - v0.y) * (v2.x - v0.x)};
    const std::int64_t g = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
    for (auto& c : n) c /= g;
    stats.normal_norms.push_back(std::sqrt(static_cast<double>(n[0] * n[0] + n[1] * n[1] + n[2] * n[2])));
    const std::int64_t offset = n[0] * v0.x + n[1] * v0.y + n[2] * v0.z;

    int solve = 0;
    for (int a = 1; a < 3; ++a) {
      if (std::abs(n[a]) > std::abs(n[solve])) solve = a;
    }
    const int ua = (solve + 1) % 3, wa = (solve + 2) % 3;
    auto coord = [](const LatticePoint3& p, int axis) { return axis == 0 ? p.x : axis == 1 ? p.y : p.z; };
    std::int64_t lo[3] = {INT64_MAX, INT64_MAX, INT64_MAX}, hi[3] = {INT64_MIN, INT64_MIN, INT64_MIN};
    for (std::size_t id : facet) {
      for (int a = 0; a < 3; ++a) {
        lo[a] = std::min(lo[a], coord(lp(id), a));
        hi[a] = std::max(hi[a], coord(lp(id), a));
      }
    }
    // q lies in the closed facet iff it is on the plane and not strictly
    // right of any edge, seen along the outward normal.
    auto edge_side = [&](const LatticePoint3& a, const LatticePoint3& b, const LatticePoint3& q) {
      const std::int64_t ex = b.x - a.x, ey = b.y - a.y, ez = b.z - a.z;
      const std::int64_t qx = q.x - a.x, qy = q.y - a.y, qz = q.z - a.z;
      const std::int64_t cx = ey * qz - ez * qy, cy = ez * qx - ex * qz, cz = ex * qy - ey * qx;
      const std::int64_t s = cx * n[0] + cy * n[1] + cz * n[2];
      return (s > 0) - (s < 0);
    };
    std::int64_t closed = 0, interior = 0;
    for (std::int64_t u = lo[ua]; u <= hi[ua]; ++u) {
      for (std::int64_t w = lo[wa]; w <= hi[wa]; ++w) {
        const std::int64_t rest = offset - n[ua] * u - n[wa] * w;
        if (rest % n[solve] != 0) continue;
        LatticePoint3 q;
        std::int64_t* qc[3] = {&q.x, &q.y, &q.z};
        *qc[ua] = u;
        *qc[wa] = w;
        *qc[solve] = rest / n[solve];
        bool in = true, strict = true;
        for (std::size_t i = 0; i < facet.size() && in; ++i) {
          const int s = edge_side(lp(facet[i]), lp(facet[(i + 1) % facet.size()]), q);
          if (s < 0) in = false;
          if (s == 0) strict = false;
        }
        if (!in) continue;
        ++closed;
        if (strict) ++interior;
        boundary.insert(q);
      }
    }
    stats.per_facet_lattice_counts.push_back(closed);
    stats.per_facet_interior_counts.push_back(interior);
  }
  stats.boundary_lattice_count = static_cast<std::int64_t>(boundary.size());
  return stats;
}

std::int64_t r3_sum(std::int64_t M) {
  if (M < 1) throw std::invalid_argument("r3_sum needs M >= 1");
  std::int64_t count = 0;
  const auto isqrt = [](std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  };
  const std::int64_t xmax = isqrt(M);
  for (std::int64_t x = -xmax; x <= xmax; ++x) {
    const std::int64_t ymax = isqrt(M - x * x);
    for (std::int64_t y = -ymax; y <= ymax; ++y) count += 2 * isqrt(M - x * x - y * y) + 1;
  }
  return count - 1;  // the origin
}

std::vector<LatticePoint3> lattice_ball(double rho) {
  const auto r = static_cast<std::int64_t>(std::floor(rho));
  // Integer bound so that rho = sqrt(M) keeps the shell |p|^2 = M.
  const auto bound = static_cast<std::int64_t>(std::floor(rho * rho + 1e-9));
  std::vector<LatticePoint3> out;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      for (std::int64_t z = -r; z <= r; ++z) {
        if (x * x + y * y + z * z <= bound) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

}  // namespace densecvx
