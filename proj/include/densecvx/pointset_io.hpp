#pragma once

#include "densecvx/point_cloud.hpp"

#include <json.hpp>
#include <string>

namespace densecvx {

/// {"label": str, "precision": "rational"|"float64", "points": [[x,y,z],...]}.
/// Rational coordinates are "num/den" strings, float64 coordinates numbers.
nlohmann::json pointset_to_json(const PointCloud& cloud);

/// Accepts strings or numbers for any coordinate. Throws
/// std::invalid_argument on schema violations.
PointCloud pointset_from_json(const nlohmann::json& doc);

void write_pointset(const PointCloud& cloud, const std::string& path);
PointCloud read_pointset(const std::string& path);

}  // namespace densecvx
