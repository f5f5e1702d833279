#include "densecvx/caps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace densecvx {

namespace {

CapParams finish(CapParams p) {
  if (!(p.h > 0 && p.h < p.R)) throw std::invalid_argument("cap parameters need 0 < h < R");
  p.r = std::sqrt(p.h * (2.0 * p.R - p.h));
  p.gamma = std::acos((p.R - p.h) / p.R);
  return p;
}

// Orthonormal frame (e1, e2, axis).
void frame(const Vec3& axis, Vec3& e1, Vec3& e2) {
  const Vec3 helper = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  e1 = normalized(cross(helper, axis));
  e2 = cross(axis, e1);
}

}  // namespace

CapParams CapParams::from_scaling(double n, double alpha, double tau) {
  if (!(n >= 8)) throw std::invalid_argument("cap parameters need n >= 8");
  if (!(alpha > 0)) throw std::invalid_argument("cap parameters need alpha > 0");
  if (!(tau >= 1.0 / 3.0 - 1e-12 && tau < 2.0 / 3.0)) throw std::invalid_argument("cap parameters need 1/3 <= tau < 2/3");
  CapParams p;
  p.n = n;
  p.alpha = alpha;
  p.tau = tau;
  p.R = alpha * std::pow(n, tau);
  p.h = alpha * std::pow(n, -tau / 2.0);
  return finish(p);
}

CapParams CapParams::from_radius_height(double R, double h) {
  CapParams p;
  p.R = R;
  p.h = h;
  return finish(p);
}

double min_pairwise_angle(const std::vector<SphericalCap>& caps) {
  double best = std::numbers::pi;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    for (std::size_t j = i + 1; j < caps.size(); ++j) best = std::min(best, angle_between(caps[i].v, caps[j].v));
  }
  return best;
}

CapPacking latitude_packing(const CapParams& params, const Vec3& axis, const Vec3& center) {
  const double gamma = params.gamma;
  if (!(gamma > 0 && gamma < std::numbers::pi / 4)) throw std::invalid_argument("latitude packing needs gamma < pi/4");
  // A hair of slack keeps the certificate strict under rounding.
  const double g = gamma * (1.0 + 1e-9);
  Vec3 e1, e2;
  const Vec3 z = normalized(axis);
  frame(z, e1, e2);

  CapPacking packing;
  packing.params = params;
  for (int b = 0;; ++b) {
    const double theta = (2 * b + 1) * g;
    if (theta > std::numbers::pi - g) break;
    const double s = std::sin(theta), c = std::cos(theta);
    // Azimuth gap at which two directions on this ring are 2g apart.
    const double cos_gap = (std::cos(2 * g) - c * c) / (s * s);
    int count = 1;
    if (cos_gap > -1.0) {
      const double gap = std::acos(std::min(1.0, cos_gap));
      count = std::max(1, static_cast<int>(std::floor(2 * std::numbers::pi / gap)));
    }
    const double step = 2 * std::numbers::pi / count;
    const double phase = (b % 2 == 1) ? step / 2 : 0.0;
    for (int i = 0; i < count; ++i) {
      const double phi = phase + i * step;
      const Vec3 v = normalized(e1 * (s * std::cos(phi)) + e2 * (s * std::sin(phi)) + z * c);
      packing.caps.push_back({center, params.R, v, params.h});
    }
  }
  packing.min_pairwise_angle = min_pairwise_angle(packing.caps);
  if (packing.caps.size() >= 2 && packing.min_pairwise_angle < 2 * gamma) {
    throw std::logic_error("latitude packing violates its separation certificate");
  }
  if (static_cast<double>(packing.caps.size()) < params.packing_lower_bound()) {
    throw std::runtime_error("latitude packing has " + std::to_string(packing.caps.size()) + " caps, below R/(2h) = " +
                             std::to_string(params.packing_lower_bound()));
  }
  return packing;
}

}  // namespace densecvx
