#include "densecvx/approx.hpp"

#include "densecvx/geometry_checks.hpp"
#include "densecvx/pointset_gen.hpp"
#include "densecvx/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace densecvx {

double min_pairwise_distance(std::span<const Vec3> points) {
  if (points.size() < 2) throw std::invalid_argument("minimum distance needs two points");
  std::vector<Vec3> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](const Vec3& a, const Vec3& b) { return a.x < b.x; });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size() && p[j].x - p[i].x < best; ++j) best = std::min(best, norm(p[j] - p[i]));
  }
  return best;
}

namespace {

// Cloud in units of its minimum distance.
std::vector<Vec3> unit_spaced(const PointCloud& cloud) {
  std::vector<Vec3> pts = cloud.approx();
  if (pts.size() < 2) return pts;
  const double scale = 1.0 / min_pairwise_distance(pts);
  for (auto& p : pts) p *= scale;
  return pts;
}

std::vector<std::size_t> lexicographic_ranks(const PointCloud& cloud) {
  std::vector<std::size_t> order(cloud.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cloud[a] < cloud[b]; });
  std::vector<std::size_t> rank(cloud.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

void finish_subset(const PointCloud& cloud, ApproxResult& result) {
  std::sort(result.indices.begin(), result.indices.end());
  if (result.indices.empty()) {
    result.subset = PointCloud();
    result.convex_verified = true;
    return;
  }
  result.subset = cloud.subset(result.indices, cloud.label() + " convex subset");
  result.convex_verified = is_convex_position(result.subset);
}

}  // namespace

ApproxResult approximate_max_convex_subset(const PointCloud& cloud, const ApproxOptions& options) {
  if (cloud.size() == 0) throw std::invalid_argument("approximation needs a nonempty cloud");
  if (options.max_trials < 1) throw std::invalid_argument("approximation needs max_trials >= 1");
  const double n = static_cast<double>(cloud.size());

  ApproxResult result;
  result.seed = options.seed;
  result.small_n_adjusted = n < 16;
  result.params = cap_params(std::max(n, 16.0), options.alpha, options.tau);

  if (cloud.size() < 8 && is_convex_position(cloud)) {
    result.indices.resize(cloud.size());
    std::iota(result.indices.begin(), result.indices.end(), std::size_t{0});
    result.accepted = true;
    finish_subset(cloud, result);
    return result;
  }

  const std::vector<Vec3> pts = unit_spaced(cloud);
  const std::vector<std::size_t> rank = lexicographic_ranks(cloud);
  const Ball enclosing = smallest_enclosing_ball(pts, options.seed);
  const CapParams& params = result.params;
  result.spread_violation = enclosing.radius > params.R;

  const CapPacking packing = latitude_packing(params);
  result.cap_count = packing.caps.size();
  const double cell = options.cell_size > 0 ? options.cell_size : params.h;
  auto engine = make_engine(options.engine, cell);

  std::vector<Vec3> inside;
  std::vector<std::size_t> inside_ids, inside_keys;
  std::vector<std::size_t> best_witnesses;
  std::size_t best_count = 0;
  bool have_best = false;
  for (int trial = 0; trial < options.max_trials; ++trial) {
    std::mt19937_64 rng(hash_words({options.seed, static_cast<std::uint64_t>(trial)}));
    const RigidMotion motion = random_congruence(enclosing.center, params.R, rng);
    if (norm(motion.translation - enclosing.center) + params.R > 3.0 * params.R * (1 + 1e-12)) {
      throw std::logic_error("placed ball escapes the radius-3R ball");
    }
    inside.clear();
    inside_ids.clear();
    inside_keys.clear();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (norm_sq(pts[i] - motion.translation) <= params.R * params.R) {
        inside.push_back(pts[i]);
        inside_ids.push_back(i);
        inside_keys.push_back(rank[i]);
      }
    }
    engine->build(inside, inside_keys);
    std::vector<std::size_t> witnesses;
    for (const auto& cap : packing.caps) {
      if (auto hit = engine->query(motion.apply(cap))) witnesses.push_back(inside_ids[*hit]);
    }
    result.trials_used = trial + 1;
    if (!have_best || witnesses.size() > best_count) {
      have_best = true;
      best_count = witnesses.size();
      best_witnesses = std::move(witnesses);
    }
    if (static_cast<double>(best_count) >= options.accept_fraction * static_cast<double>(packing.caps.size())) {
      result.accepted = true;
      break;
    }
  }
  result.indices = std::move(best_witnesses);
  result.nonempty_caps = result.indices.size();
  result.nonempty_fraction = static_cast<double>(result.nonempty_caps) / static_cast<double>(result.cap_count);
  finish_subset(cloud, result);
  return result;
}

double opt_upper_bound(const PointCloud& cloud) {
  if (cloud.size() < 2) return static_cast<double>(cloud.size());
  const auto pts = unit_spaced(cloud);
  const double r = smallest_enclosing_ball(pts).radius;
  return 16.0 * r * r;
}

double monte_carlo_nonempty_fraction(const PointCloud& cloud, const CapParams& params, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("Monte-Carlo estimate needs trials >= 1");
  const auto pts = unit_spaced(cloud);
  const Ball enclosing = smallest_enclosing_ball(pts, seed);
  std::mt19937_64 rng(hash_words({seed, 0x6d63ULL}));
  long hits = 0;
  for (int t = 0; t < trials; ++t) {
    const Vec3 v = uniform_on_sphere(rng);
    const Vec3 center = uniform_in_ball(enclosing.center, 2.0 * params.R, rng);
    const SphericalCap cap{center, params.R, v, params.h};
    if (std::any_of(pts.begin(), pts.end(), [&](const Vec3& p) { return cap_contains(cap, p); })) ++hits;
  }
  return static_cast<double>(hits) / trials;
}

double calibrate_accept_fraction(double alpha, double tau, int trials, std::uint64_t seed) {
  const PointCloud cloud = perturbed_grid(PerturbationParams::with_default_epsilon(3, seed));
  return 0.5 * monte_carlo_nonempty_fraction(cloud, cap_params(512, alpha, tau), trials, seed);
}

}  // namespace densecvx
