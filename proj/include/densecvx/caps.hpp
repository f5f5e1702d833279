#pragma once

#include "densecvx/vec3.hpp"

#include <vector>

namespace densecvx {

struct CapParams {
  double n = 0;
  double alpha = 0;
  double tau = 0;
  double R = 0;
  double h = 0;
  double r = 0;      // base radius, r^2 = R^2 - (R - h)^2
  double gamma = 0;  // polar half-angle, cos(gamma) = (R - h) / R

  /// R = alpha n^tau, h = alpha n^{-tau/2}. Throws std::invalid_argument
  /// unless n >= 8, alpha > 0 and 1/3 <= tau < 2/3.
  static CapParams from_scaling(double n, double alpha, double tau);

  /// Direct construction; throws unless 0 < h < R.
  static CapParams from_radius_height(double R, double h);

  /// R / (2h), the count every packing must reach.
  double packing_lower_bound() const { return R / (2.0 * h); }
};

inline CapParams cap_params(double n, double alpha, double tau) { return CapParams::from_scaling(n, alpha, tau); }

/// {a : |a - center| <= R and <a - center, v> >= R - h}.
struct SphericalCap {
  Vec3 center;
  double R = 0;
  Vec3 v{0, 0, 1};
  double h = 0;
};

inline bool cap_contains(const SphericalCap& cap, const Vec3& a) {
  const Vec3 d = a - cap.center;
  return norm_sq(d) <= cap.R * cap.R && dot(d, cap.v) >= cap.R - cap.h;
}

struct CapPacking {
  CapParams params;
  std::vector<SphericalCap> caps;
  double min_pairwise_angle = 0;  // >= 2 gamma
};

/// Caps on latitude rings theta_b = (2b+1) gamma about `axis`, each ring
/// holding as many caps as fit at geodesic separation 2 gamma, alternate
/// rings offset by half a step. The separation certificate is verified
/// exhaustively. Throws std::invalid_argument if gamma >= pi/4 and
/// std::runtime_error if fewer than R/(2h) caps result.
CapPacking latitude_packing(const CapParams& params, const Vec3& axis = {0, 0, 1}, const Vec3& center = {0, 0, 0});

/// Smallest pairwise angle between cap directions (pi for < 2 caps).
double min_pairwise_angle(const std::vector<SphericalCap>& caps);

}  // namespace densecvx
