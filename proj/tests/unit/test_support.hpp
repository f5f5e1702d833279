#pragma once

#include "densecvx/point.hpp"
#include "densecvx/predicates.hpp"

#include <random>
#include <vector>

namespace test_support {

using namespace densecvx;

inline std::vector<RationalPoint3> random_rational_points(std::size_t n, std::uint64_t seed, double scale = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<RationalPoint3> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(rational_from_vec3({u(rng), u(rng), u(rng)}));
  return pts;
}

// Independent hull oracle for points in general position: p is a vertex
// iff no closed tetrahedron of four other points contains it.
inline bool in_closed_tetrahedron(const RationalPoint3& a, const RationalPoint3& b, const RationalPoint3& c,
                                  const RationalPoint3& d, const RationalPoint3& p) {
  const int s = orient3d(a, b, c, d);
  if (s == 0) return false;
  const int s0 = orient3d(p, b, c, d), s1 = orient3d(a, p, c, d), s2 = orient3d(a, b, p, d), s3 = orient3d(a, b, c, p);
  return s0 != -s && s1 != -s && s2 != -s && s3 != -s;
}

inline std::vector<std::size_t> brute_force_vertices(const std::vector<RationalPoint3>& pts) {
  std::vector<std::size_t> out;
  const std::size_t n = pts.size();
  for (std::size_t p = 0; p < n; ++p) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a)
      for (std::size_t b = a + 1; b < n && !covered; ++b)
        for (std::size_t c = b + 1; c < n && !covered; ++c)
          for (std::size_t d = c + 1; d < n && !covered; ++d) {
            if (p == a || p == b || p == c || p == d) continue;
            covered = in_closed_tetrahedron(pts[a], pts[b], pts[c], pts[d], pts[p]);
          }
    if (!covered) out.push_back(p);
  }
  return out;
}

}  // namespace test_support
