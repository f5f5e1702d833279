#include "densecvx/point_cloud.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace densecvx {

std::string_view to_string(Precision p) {
  return p == Precision::Rational ? "rational" : "float64";
}

Precision precision_from_string(std::string_view s) {
  if (s == "rational") return Precision::Rational;
  if (s == "float64") return Precision::Float64;
  throw std::invalid_argument("unknown precision '" + std::string(s) + "'");
}

PointCloud::PointCloud(std::vector<RationalPoint3> points, std::string label, Precision precision)
    : points_(std::move(points)), label_(std::move(label)), precision_(precision) {
  if (points_.empty()) throw std::invalid_argument("point cloud must contain at least one point");

  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i - 1]] == points_[order[i]]) {
      throw std::invalid_argument("duplicate point at indices " + std::to_string(order[i - 1]) +
                                  " and " + std::to_string(order[i]));
    }
  }

  approx_.reserve(points_.size());
  for (const auto& p : points_) approx_.push_back(p.to_vec3());
}

PointCloud PointCloud::from_vec3(std::span<const Vec3> points, std::string label) {
  std::vector<RationalPoint3> exact;
  exact.reserve(points.size());
  for (const auto& v : points) exact.push_back(rational_from_vec3(v));
  return PointCloud(std::move(exact), std::move(label), Precision::Float64);
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices, std::string label) const {
  std::vector<RationalPoint3> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(points_.at(i));
  return PointCloud(std::move(out), label.empty() ? label_ : std::move(label), precision_);
}

}  // namespace densecvx
