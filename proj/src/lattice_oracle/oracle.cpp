#include "densecvx/lattice.hpp"

#include "densecvx/hull.hpp"
#include "densecvx/predicates.hpp"

#include <stdexcept>
#include <string>

namespace densecvx {

namespace {

class ConvexSubsetSearch {
 public:
  explicit ConvexSubsetSearch(const PointCloud& cloud) : scaled_(scale_to_integers(cloud.points())) {}

  OracleResult run() {
    std::vector<std::size_t> current;
    descend(current, 0);
    result_.size = result_.witness.size();
    return result_;
  }

 private:
  bool convex(const std::vector<std::size_t>& ids) const {
    ScaledPoints sub;
    sub.denominator = scaled_.denominator;
    for (std::size_t i : ids) sub.points.push_back(scaled_.points[i]);
    return convex_hull_3d(sub).vertices.size() == ids.size();
  }

  void descend(std::vector<std::size_t>& current, std::size_t next) {
    ++result_.nodes_explored;
    if (current.size() > result_.witness.size()) result_.witness = current;
    const std::size_t n = scaled_.points.size();
    for (std::size_t j = next; j < n; ++j) {
      if (current.size() + (n - j) <= result_.witness.size()) break;
      current.push_back(j);
      if (convex(current)) descend(current, j + 1);
      current.pop_back();
    }
  }

  ScaledPoints scaled_;
  OracleResult result_;
};

}  // namespace

OracleResult max_convex_subset_exact(const PointCloud& cloud) {
  if (cloud.size() > kOracleMaxPoints) {
    throw std::invalid_argument("exact oracle is limited to " + std::to_string(kOracleMaxPoints) + " points (got " +
                                std::to_string(cloud.size()) + "); use the approximation engine instead");
  }
  return ConvexSubsetSearch(cloud).run();
}

SubadditivityReport subadditivity_check(const PointCloud& cloud, const std::vector<std::vector<std::size_t>>& partition) {
  std::vector<int> seen(cloud.size(), 0);
  for (const auto& part : partition) {
    if (part.empty()) throw std::invalid_argument("partition has an empty part");
    if (part.size() > kOracleMaxPoints) throw std::invalid_argument("partition part exceeds the oracle limit");
    for (std::size_t i : part) {
      if (i >= cloud.size() || seen[i]++) throw std::invalid_argument("partition indices must be distinct and in range");
    }
  }
  for (int s : seen) {
    if (s != 1) throw std::invalid_argument("partition does not cover the cloud");
  }
  SubadditivityReport report;
  report.whole = max_convex_subset_exact(cloud).size;
  for (const auto& part : partition) report.sum_of_parts += max_convex_subset_exact(cloud.subset(part)).size;
  report.holds = report.whole <= report.sum_of_parts;
  return report;
}

}  // namespace densecvx
