#include "densecvx/pointset_gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace densecvx {

PointCloud random_ball_cloud(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_ball_cloud needs n >= 1");
  const double radius = std::cbrt(static_cast<double>(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-radius, radius);

  using Cell = std::tuple<long, long, long>;
  std::map<Cell, std::vector<Vec3>> cells;
  auto cell_of = [](const Vec3& p) {
    return Cell{static_cast<long>(std::floor(p.x)), static_cast<long>(std::floor(p.y)), static_cast<long>(std::floor(p.z))};
  };
  auto far_enough = [&](const Vec3& p) {
    const auto [cx, cy, cz] = cell_of(p);
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = cells.find({cx + dx, cy + dy, cz + dz});
          if (it == cells.end()) continue;
          for (const auto& q : it->second) {
            if (norm_sq(p - q) < 1.0) return false;
          }
        }
      }
    }
    return true;
  };

  std::vector<Vec3> pts;
  pts.reserve(n);
  const std::size_t max_attempts = 1000 * n + 1000;
  for (std::size_t attempt = 0; pts.size() < n; ++attempt) {
    if (attempt == max_attempts) throw std::runtime_error("random_ball_cloud: could not place points at unit spacing");
    const Vec3 p{coord(rng), coord(rng), coord(rng)};
    if (norm_sq(p) > radius * radius || !far_enough(p)) continue;
    cells[cell_of(p)].push_back(p);
    pts.push_back(p);
  }
  return PointCloud::from_vec3(pts, "random-ball n=" + std::to_string(n));
}

PointCloud sparse_jittered_grid(int side, double tau, std::uint64_t seed) {
  if (side < 1) throw std::invalid_argument("sparse_jittered_grid needs side >= 1");
  const double n = std::pow(static_cast<double>(side), 3.0);
  const double spacing = std::pow(n, tau - 1.0 / 3.0);
  const double amplitude = std::max((spacing - 1.0) / 2.0, 0x1.0p-6);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-amplitude, amplitude);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < side; ++x) {
    for (int y = 0; y < side; ++y) {
      for (int z = 0; z < side; ++z) {
        const double jx = jitter(rng), jy = jitter(rng), jz = jitter(rng);
        pts.push_back({spacing * x + jx, spacing * y + jy, spacing * z + jz});
      }
    }
  }
  return PointCloud::from_vec3(pts, "sparse-grid side=" + std::to_string(side));
}

}  // namespace densecvx
