#include "densecvx/approx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace densecvx {

namespace {

Ball ball2(const Vec3& a, const Vec3& b) { return {(a + b) * 0.5, 0.5 * norm(a - b)}; }

Ball widest_pair(std::span<const Vec3> pts) {
  Ball best{pts[0], 0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Ball b = ball2(pts[i], pts[j]);
      if (b.radius > best.radius) best = b;
    }
  }
  return best;
}

// Smallest ball with a, b, c on its boundary: the circumcircle's ball.
Ball ball3(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 u = b - a, v = c - a;
  const Vec3 n = cross(u, v);
  const double nn = norm_sq(n);
  if (nn <= 1e-24 * norm_sq(u) * norm_sq(v)) {
    const std::array<Vec3, 3> pts{a, b, c};
    return widest_pair(pts);
  }
  const Vec3 offset = cross(u * norm_sq(v) - v * norm_sq(u), n) * (-1.0 / (2.0 * nn));
  return {a + offset, norm(offset)};
}

bool inside(const Ball& ball, const Vec3& p) {
  return norm_sq(p - ball.center) <= ball.radius * ball.radius * (1.0 + 1e-12) + 1e-300;
}

Ball ball4(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 u = b - a, v = c - a, w = d - a;
  const double det = dot(u, cross(v, w));
  const double scale = norm(u) * norm(v) * norm(w);
  if (std::abs(det) > 1e-12 * scale) {
    // Solve 2 <p_i - a, x> = |p_i - a|^2 by Cramer's rule.
    const Vec3 x = (cross(v, w) * norm_sq(u) + cross(w, u) * norm_sq(v) + cross(u, v) * norm_sq(w)) * (0.5 / det);
    return {a + x, norm(x)};
  }
  // Nearly coplanar: best three-point ball covering all four.
  const std::array<Vec3, 4> pts{a, b, c, d};
  Ball best{a, -1};
  for (int skip = 0; skip < 4; ++skip) {
    std::array<Vec3, 3> tri;
    for (int i = 0, t = 0; i < 4; ++i) {
      if (i != skip) tri[t++] = pts[i];
    }
    Ball cand = ball3(tri[0], tri[1], tri[2]);
    if (inside(cand, pts[skip]) && (best.radius < 0 || cand.radius < best.radius)) best = cand;
  }
  return best.radius >= 0 ? best : widest_pair(pts);
}

}  // namespace

Ball smallest_enclosing_ball(std::span<const Vec3> points, std::uint64_t seed) {
  if (points.empty()) return {};
  std::vector<Vec3> p(points.begin(), points.end());
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);

  Ball ball{p[0], 0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (inside(ball, p[i])) continue;
    ball = {p[i], 0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(ball, p[j])) continue;
      ball = ball2(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (inside(ball, p[k])) continue;
        ball = ball3(p[i], p[j], p[k]);
        for (std::size_t l = 0; l < k; ++l) {
          if (inside(ball, p[l])) continue;
          ball = ball4(p[i], p[j], p[k], p[l]);
        }
      }
    }
  }
  return ball;
}

Ball smallest_enclosing_ball(const PointCloud& cloud, std::uint64_t seed) {
  return smallest_enclosing_ball(cloud.approx(), seed);
}

}  // namespace densecvx
