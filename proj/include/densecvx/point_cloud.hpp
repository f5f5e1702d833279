#pragma once

#include "densecvx/point.hpp"

#include <span>
#include <string>
#include <vector>

namespace densecvx {

enum class Precision { Rational, Float64 };

std::string_view to_string(Precision p);
Precision precision_from_string(std::string_view s);

/// An immutable ordered point set. Coordinates are always held exactly; a
/// Float64 cloud simply promises that every coordinate is a double, which
/// controls how it is serialized. A float snapshot is cached for the
/// Monte-Carlo paths.
class PointCloud {
 public:
  PointCloud() = default;

  /// Throws std::invalid_argument if the list is empty or has duplicates.
  explicit PointCloud(std::vector<RationalPoint3> points, std::string label = {},
             Precision precision = Precision::Rational);

  static PointCloud from_vec3(std::span<const Vec3> points, std::string label = {});

  std::size_t size() const { return points_.size(); }
  const std::vector<RationalPoint3>& points() const { return points_; }
  const RationalPoint3& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vec3>& approx() const { return approx_; }
  const std::string& label() const { return label_; }
  Precision precision() const { return precision_; }

  /// New cloud holding points[indices[0]], points[indices[1]], ...
  PointCloud subset(std::span<const std::size_t> indices, std::string label = {}) const;

 private:
  std::vector<RationalPoint3> points_;
  std::vector<Vec3> approx_;
  std::string label_;
  Precision precision_ = Precision::Rational;
};

}  // namespace densecvx
