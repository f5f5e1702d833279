#include "densecvx/pointset_io.hpp"

#include <fstream>
#include <stdexcept>

namespace densecvx {

namespace {

Rational coordinate_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(std::to_string(v.get<long long>())));
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw std::invalid_argument("coordinate must be a string or a number");
}

}  // namespace

nlohmann::json pointset_to_json(const PointCloud& cloud) {
  nlohmann::json points = nlohmann::json::array();
  const bool as_float = cloud.precision() == Precision::Float64;
  for (const auto& p : cloud.points()) {
    if (as_float) {
      points.push_back({p.x.get_d(), p.y.get_d(), p.z.get_d()});
    } else {
      points.push_back({format_rational(p.x), format_rational(p.y), format_rational(p.z)});
    }
  }
  return {{"label", cloud.label()}, {"precision", std::string(to_string(cloud.precision()))}, {"points", points}};
}

PointCloud pointset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw std::invalid_argument("point set JSON needs a \"points\" array");
  }
  Precision precision = Precision::Rational;
  if (doc.contains("precision")) precision = precision_from_string(doc["precision"].get<std::string>());
  std::string label = doc.value("label", std::string{});
  std::vector<RationalPoint3> points;
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || row.size() != 3) throw std::invalid_argument("each point needs three coordinates");
    points.emplace_back(coordinate_from_json(row[0]), coordinate_from_json(row[1]), coordinate_from_json(row[2]));
  }
  return PointCloud(std::move(points), std::move(label), precision);
}

void write_pointset(const PointCloud& cloud, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << pointset_to_json(cloud).dump(1) << '\n';
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

PointCloud read_pointset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
  return pointset_from_json(doc);
}

}  // namespace densecvx
