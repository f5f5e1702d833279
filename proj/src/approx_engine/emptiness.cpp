#include "densecvx/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace densecvx {

void BruteEngine::build(std::span<const Vec3> points, std::span<const std::size_t> keys) {
  points_.assign(points.begin(), points.end());
  keys_.assign(keys.begin(), keys.end());
}

std::optional<std::size_t> BruteEngine::query(const SphericalCap& cap) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if ((!best || keys_[i] < keys_[*best]) && cap_contains(cap, points_[i])) best = i;
  }
  return best;
}

namespace {

constexpr long kCellBias = 1L << 20;

}  // namespace

BucketEngine::BucketEngine(double cell_size) : cell_size_(cell_size) {
  if (!(cell_size > 0)) throw std::invalid_argument("bucket engine needs a positive cell size");
}

long BucketEngine::cell_index(double c) const { return static_cast<long>(std::floor(c / cell_size_)); }

std::uint64_t BucketEngine::key_of(long i, long j, long k) const {
  auto part = [](long v) { return static_cast<std::uint64_t>(std::clamp(v + kCellBias, 0L, 2 * kCellBias - 1)); };
  return (part(i) << 42) | (part(j) << 21) | part(k);
}

void BucketEngine::build(std::span<const Vec3> points, std::span<const std::size_t> keys) {
  points_.assign(points.begin(), points.end());
  keys_.assign(keys.begin(), keys.end());
  for (const auto& p : points_) {
    for (double c : {p.x, p.y, p.z}) {
      if (std::abs(c / cell_size_) >= static_cast<double>(kCellBias - 2)) {
        throw std::invalid_argument("bucket engine: coordinate out of grid range");
      }
    }
  }
  std::vector<std::uint64_t> cell(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    cell[i] = key_of(cell_index(points_[i].x), cell_index(points_[i].y), cell_index(points_[i].z));
  }
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return cell[a] < cell[b]; });
  cell_keys_.clear();
  cell_start_.clear();
  for (std::size_t r = 0; r < order_.size(); ++r) {
    if (r == 0 || cell[order_[r]] != cell_keys_.back()) {
      cell_keys_.push_back(cell[order_[r]]);
      cell_start_.push_back(r);
    }
  }
  cell_start_.push_back(order_.size());
}

std::optional<std::size_t> BucketEngine::query(const SphericalCap& cap) const {
  if (points_.empty()) return std::nullopt;
  const double base = cap.R - cap.h;
  const double r = std::sqrt(cap.h * (2.0 * cap.R - cap.h));
  // The cap lies in the ball of radius r about its base center.
  const Vec3 b = cap.center + cap.v * base;
  const double lo[3] = {b.x - r, b.y - r, b.z - r};
  const double hi[3] = {b.x + r, b.y + r, b.z + r};
  const double v[3] = {cap.v.x, cap.v.y, cap.v.z};
  const double c[3] = {cap.center.x, cap.center.y, cap.center.z};

  int d = 0;
  for (int a = 1; a < 3; ++a) {
    if (std::abs(v[a]) > std::abs(v[d])) d = a;
  }
  const int u = (d + 1) % 3, w = (d + 2) % 3;

  std::optional<std::size_t> best;
  long idx[3];
  for (idx[u] = cell_index(lo[u]); idx[u] <= cell_index(hi[u]); ++idx[u]) {
    const double u0 = idx[u] * cell_size_ - c[u], u1 = u0 + cell_size_;
    const double mu_lo = std::min(v[u] * u0, v[u] * u1), mu_hi = std::max(v[u] * u0, v[u] * u1);
    for (idx[w] = cell_index(lo[w]); idx[w] <= cell_index(hi[w]); ++idx[w]) {
      const double w0 = idx[w] * cell_size_ - c[w], w1 = w0 + cell_size_;
      const double m_lo = mu_lo + std::min(v[w] * w0, v[w] * w1);
      const double m_hi = mu_hi + std::max(v[w] * w0, v[w] * w1);
      // Slab base <= v_d (a_d - c_d) + m <= R along the dominant axis.
      double t0 = (base - m_hi) / v[d], t1 = (cap.R - m_lo) / v[d];
      if (t0 > t1) std::swap(t0, t1);
      const long k0 = cell_index(std::max(lo[d], c[d] + t0)) - 1;
      const long k1 = cell_index(std::min(hi[d], c[d] + t1)) + 1;
      for (idx[d] = k0; idx[d] <= k1; ++idx[d]) {
        const std::uint64_t key = key_of(idx[0], idx[1], idx[2]);
        auto it = std::lower_bound(cell_keys_.begin(), cell_keys_.end(), key);
        if (it == cell_keys_.end() || *it != key) continue;
        const auto slot = static_cast<std::size_t>(it - cell_keys_.begin());
        for (std::size_t r2 = cell_start_[slot]; r2 < cell_start_[slot + 1]; ++r2) {
          const std::size_t i = order_[r2];
          if ((!best || keys_[i] < keys_[*best]) && cap_contains(cap, points_[i])) best = i;
        }
      }
    }
  }
  return best;
}

EngineKind engine_from_string(const std::string& name) {
  if (name == "brute") return EngineKind::Brute;
  if (name == "bucket") return EngineKind::Bucket;
  throw std::invalid_argument("unknown engine '" + name + "' (brute|bucket)");
}

std::unique_ptr<EmptinessEngine> make_engine(EngineKind kind, double cell_size) {
  if (kind == EngineKind::Brute) return std::make_unique<BruteEngine>();
  return std::make_unique<BucketEngine>(cell_size);
}

}  // namespace densecvx
