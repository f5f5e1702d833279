#pragma once

#include "densecvx/point_cloud.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace densecvx {

/// (N)_eps = sum of eps^{i+1} over the set bits i of N. Lies in [0, 2 eps).
/// Throws std::invalid_argument unless 0 < eps < 1/2.
Rational binary_eps(const BigInt& n, const Rational& eps);
Rational binary_eps(std::uint64_t n, const Rational& eps);

/// 2^{-ceil(log2 n) - 4}.
Rational default_horton_epsilon(std::size_t n);

/// {(i, (i)_eps) : i = 1..n}.
std::vector<RationalPoint2> horton_set_2d(std::size_t n, const Rational& eps);
std::vector<RationalPoint2> horton_set_2d(std::size_t n);

/// True iff every a in A lies strictly below every line through two points
/// of B and every b in B strictly above every line through two points of A.
/// Throws std::invalid_argument if two points of A and B share an x value.
bool check_deep_below(std::span<const RationalPoint2> a, std::span<const RationalPoint2> b);

/// Recursive Horton test on an x-sorted sequence: the even- and odd-position
/// subsequences are Horton and one lies deep below the other.
bool is_horton(std::span<const RationalPoint2> points);

struct PerturbationParams {
  int k = 1;
  Rational epsilon;
  std::uint64_t seed = 0;

  /// eps = 2^{-(k+7)}.
  static PerturbationParams with_default_epsilon(int k, std::uint64_t seed);

  /// Throws std::invalid_argument unless k >= 1, eps > 0,
  /// eps < 2^{-k}/100 and eps < 1/(2 * 2^k).
  void validate() const;
  std::int64_t side() const { return std::int64_t{1} << k; }
};

/// Noise vector u(p) in [-1, 1)^3, a pure function of (seed, p).
RationalPoint3 perturbation_noise(const LatticePoint3& p, std::uint64_t seed);

/// p + sum_{i != j} eps^{(3i+j-5)k} (p_i)_eps e_j + eps^{7k} u(p).
/// `u_override` replaces u(p), e.g. with zero.
RationalPoint3 phi_perturb(const LatticePoint3& p, const PerturbationParams& params,
                           const std::optional<RationalPoint3>& u_override = std::nullopt);

/// Batch form of phi_perturb sharing the power tables.
std::vector<RationalPoint3> phi_perturb_all(std::span<const LatticePoint3> points, const PerturbationParams& params);

/// Phi(G) for G = {0..2^k-1}^3 in x-major order.
PointCloud perturbed_grid(const PerturbationParams& params);

/// All grid points base + t * direction inside G, ascending t (t may be
/// negative). Throws unless direction is primitive and base lies in G.
std::vector<LatticePoint3> grid_line_subset(int k, const LatticePoint3& direction, const LatticePoint3& base);

/// All grid points p of G with <normal, p> = offset, x-major order.
std::vector<LatticePoint3> grid_plane_subset(int k, const LatticePoint3& normal, std::int64_t offset);

/// {0..2^k-1}^3, x-major.
std::vector<LatticePoint3> grid_points(int k);
PointCloud plain_grid(int k);

/// n points uniform in a ball of radius n^{1/3} with pairwise distance
/// >= 1, by sequential rejection. Float64 precision.
PointCloud random_ball_cloud(std::size_t n, std::uint64_t seed);

/// side^3 points on a grid of spacing s = n^{tau - 1/3}, each displaced
/// uniformly in [-a, a]^3 with a = max((s - 1)/2, 2^-6). Minimum distance
/// stays near 1 while the spread grows like n^tau. Float64 precision.
PointCloud sparse_jittered_grid(int side, double tau, std::uint64_t seed);

}  // namespace densecvx
