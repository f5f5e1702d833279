#pragma once

#include "densecvx/caps.hpp"
#include "densecvx/point_cloud.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace densecvx {

struct Ball {
  Vec3 center;
  double radius = 0;
};

/// Minimal enclosing ball by the randomized move-to-front (Welzl) scheme;
/// the shuffle is seeded, so the result is deterministic.
Ball smallest_enclosing_ball(std::span<const Vec3> points, std::uint64_t seed = 0);
Ball smallest_enclosing_ball(const PointCloud& cloud, std::uint64_t seed = 0);

struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;
  double norm() const;
};

Vec3 rotate(const Quaternion& q, const Vec3& v);

/// Uniform on SO(3) (Shoemake's subgroup algorithm).
Quaternion random_rotation(std::mt19937_64& rng);

/// x -> rotation(x) + translation; rotate first, then translate.
struct RigidMotion {
  Quaternion rotation;
  Vec3 translation;

  Vec3 apply(const Vec3& p) const { return rotate(rotation, p) + translation; }
  Vec3 apply_direction(const Vec3& v) const { return rotate(rotation, v); }
  /// Image of a cap built about the origin.
  SphericalCap apply(const SphericalCap& cap) const;
};

/// Uniform rotation, then a translation taking the origin to a uniform point
/// of the ball of radius 2R about `center`.
RigidMotion random_congruence(const Vec3& center, double R, std::mt19937_64& rng);

/// Uniform point in the ball of radius `radius` about `center`.
Vec3 uniform_in_ball(const Vec3& center, double radius, std::mt19937_64& rng);
Vec3 uniform_on_sphere(std::mt19937_64& rng);

/// Cap-emptiness queries. build() takes the points and a ranking key per
/// point; query() returns the position (in the built list) of the contained
/// point of smallest key, or nothing if the cap is empty.
class EmptinessEngine {
 public:
  virtual ~EmptinessEngine() = default;
  virtual void build(std::span<const Vec3> points, std::span<const std::size_t> keys) = 0;
  virtual std::optional<std::size_t> query(const SphericalCap& cap) const = 0;
};

class BruteEngine final : public EmptinessEngine {
 public:
  void build(std::span<const Vec3> points, std::span<const std::size_t> keys) override;
  std::optional<std::size_t> query(const SphericalCap& cap) const override;

 private:
  std::vector<Vec3> points_;
  std::vector<std::size_t> keys_;
};

/// Hashes points into a uniform grid and, per query, scans only the cells
/// meeting the slab R - h <= <a - center, v> <= R around the cap's base disk.
class BucketEngine final : public EmptinessEngine {
 public:
  explicit BucketEngine(double cell_size);
  void build(std::span<const Vec3> points, std::span<const std::size_t> keys) override;
  std::optional<std::size_t> query(const SphericalCap& cap) const override;

 private:
  long cell_index(double c) const;
  std::uint64_t key_of(long i, long j, long k) const;

  double cell_size_;
  std::vector<Vec3> points_;
  std::vector<std::size_t> keys_;
  std::vector<std::uint64_t> cell_keys_;  // sorted cell ids
  std::vector<std::size_t> cell_start_;   // CSR offsets into order_
  std::vector<std::size_t> order_;
};

enum class EngineKind { Brute, Bucket };
EngineKind engine_from_string(const std::string& name);
std::unique_ptr<EmptinessEngine> make_engine(EngineKind kind, double cell_size);

struct ApproxOptions {
  double alpha = 0.5;
  double tau = 1.0 / 3.0;
  double accept_fraction = 0.04;
  int max_trials = 100;
  std::uint64_t seed = 0;
  EngineKind engine = EngineKind::Brute;
  double cell_size = 0;  // bucket engine; 0 means h
};

struct ApproxResult {
  std::vector<std::size_t> indices;  // ascending indices into the input cloud
  PointCloud subset;
  double nonempty_fraction = 0;  // of the returned trial
  std::size_t nonempty_caps = 0;
  std::size_t cap_count = 0;
  int trials_used = 0;
  CapParams params;
  std::uint64_t seed = 0;
  bool accepted = false;           // a trial reached accept_fraction
  bool small_n_adjusted = false;   // parameters computed for n = 16
  bool spread_violation = false;   // enclosing radius exceeded R
  bool convex_verified = false;    // exact check on the witnesses
};

/// Minimum pairwise distance in floating point.
double min_pairwise_distance(std::span<const Vec3> points);

/// Rescales to unit minimum distance, places the latitude packing on a
/// random congruent copy of the ball B of radius R about the enclosing
/// ball's center, and keeps one witness per nonempty cap. Returns the first
/// trial reaching accept_fraction, otherwise the best trial, flagged.
ApproxResult approximate_max_convex_subset(const PointCloud& cloud, const ApproxOptions& options);

/// 16 (R_enc / d_min)^2: surface area 4 pi R^2 of the enclosing sphere times
/// 4/pi points per unit area at unit spacing.
double opt_upper_bound(const PointCloud& cloud);

/// Fraction of random caps (uniform direction, center uniform in the ball of
/// radius 2R about the enclosing center) that contain a point; the cloud is
/// rescaled to unit minimum distance first.
double monte_carlo_nonempty_fraction(const PointCloud& cloud, const CapParams& params, int trials, std::uint64_t seed);

/// Half the Monte-Carlo fraction on the k = 3 perturbed grid (n = 512).
double calibrate_accept_fraction(double alpha, double tau, int trials, std::uint64_t seed);

/// Value persisted in config/default.conf by calibrate_accept_fraction(0.5, 1/3, 20000, 1).
inline constexpr double kDefaultAcceptFraction = 0.04;

}  // namespace densecvx
