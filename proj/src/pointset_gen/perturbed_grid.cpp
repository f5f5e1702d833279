#include "densecvx/pointset_gen.hpp"
#include "densecvx/random.hpp"

#include <numeric>
#include <stdexcept>

namespace densecvx {

PerturbationParams PerturbationParams::with_default_epsilon(int k, std::uint64_t seed) {
  return {k, pow2(-(k + 7)), seed};
}

void PerturbationParams::validate() const {
  if (k < 1 || k > 20) throw std::invalid_argument("perturbation needs 1 <= k <= 20");
  if (sgn(epsilon) <= 0) throw std::invalid_argument("perturbation needs eps > 0");
  const Rational side_inv = pow2(-k);
  if (!(epsilon < side_inv / 100)) throw std::invalid_argument("perturbation needs eps < 2^-k / 100");
  if (!(epsilon < side_inv / 2)) throw std::invalid_argument("perturbation needs eps < 1 / (2 n^{1/3})");
}

RationalPoint3 perturbation_noise(const LatticePoint3& p, std::uint64_t seed) {
  auto coord = [&](std::uint64_t axis) {
    const std::uint64_t r = hash_words({seed, static_cast<std::uint64_t>(p.x), static_cast<std::uint64_t>(p.y),
                                        static_cast<std::uint64_t>(p.z), axis}) >> 32;
    Rational u(static_cast<long>(r) - (1L << 31), 1UL << 31);
    u.canonicalize();
    return u;
  };
  return {coord(0), coord(1), coord(2)};
}

namespace {

// Shared tables for Phi: eps^{mk} for the six pair weights and eps^{7k}.
struct PhiTables {
  Rational w[8];  // w[m] = eps^{m k}
  std::vector<Rational> encoded;  // (N)_eps for N < 2^k

  explicit PhiTables(const PerturbationParams& params) {
    const Rational ek = pow(params.epsilon, static_cast<unsigned long>(params.k));
    w[0] = 1;
    for (int m = 1; m < 8; ++m) w[m] = w[m - 1] * ek;
    encoded.reserve(static_cast<std::size_t>(params.side()));
    for (std::int64_t v = 0; v < params.side(); ++v) encoded.push_back(binary_eps(static_cast<std::uint64_t>(v), params.epsilon));
  }

  const Rational& enc(std::int64_t v, const PerturbationParams& params) {
    if (v < 0 || v >= params.side()) throw std::invalid_argument("grid point outside G");
    return encoded[static_cast<std::size_t>(v)];
  }

  // Pair (i, j) has weight eps^{(3i+j-5)k}: (1,2)->0 (1,3)->1 (2,1)->2
  // (2,3)->4 (3,1)->5 (3,2)->6.
  RationalPoint3 apply(const LatticePoint3& p, const PerturbationParams& params, const RationalPoint3& u) {
    const Rational& e1 = enc(p.x, params);
    const Rational& e2 = enc(p.y, params);
    const Rational& e3 = enc(p.z, params);
    RationalPoint3 q(Rational(static_cast<long>(p.x)), Rational(static_cast<long>(p.y)), Rational(static_cast<long>(p.z)));
    q.x += w[2] * e2 + w[5] * e3 + w[7] * u.x;
    q.y += w[0] * e1 + w[6] * e3 + w[7] * u.y;
    q.z += w[1] * e1 + w[4] * e2 + w[7] * u.z;
    return q;
  }
};

}  // namespace

RationalPoint3 phi_perturb(const LatticePoint3& p, const PerturbationParams& params,
                           const std::optional<RationalPoint3>& u_override) {
  params.validate();
  PhiTables tables(params);
  return tables.apply(p, params, u_override ? *u_override : perturbation_noise(p, params.seed));
}

std::vector<RationalPoint3> phi_perturb_all(std::span<const LatticePoint3> points, const PerturbationParams& params) {
  params.validate();
  PhiTables tables(params);
  std::vector<RationalPoint3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(tables.apply(p, params, perturbation_noise(p, params.seed)));
  return out;
}

std::vector<LatticePoint3> grid_points(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("grid needs 0 <= k <= 20");
  const std::int64_t side = std::int64_t{1} << k;
  std::vector<LatticePoint3> out;
  out.reserve(static_cast<std::size_t>(side * side * side));
  for (std::int64_t x = 0; x < side; ++x) {
    for (std::int64_t y = 0; y < side; ++y) {
      for (std::int64_t z = 0; z < side; ++z) out.push_back({x, y, z});
    }
  }
  return out;
}

PointCloud perturbed_grid(const PerturbationParams& params) {
  const auto grid = grid_points(params.k);
  return PointCloud(phi_perturb_all(grid, params), "perturbed-grid k=" + std::to_string(params.k));
}

PointCloud plain_grid(int k) {
  std::vector<RationalPoint3> pts;
  for (const auto& p : grid_points(k)) pts.push_back(p.to_rational());
  return PointCloud(std::move(pts), "grid k=" + std::to_string(k));
}

std::vector<LatticePoint3> grid_line_subset(int k, const LatticePoint3& direction, const LatticePoint3& base) {
  const std::int64_t side = std::int64_t{1} << k;
  const std::int64_t d[3] = {direction.x, direction.y, direction.z};
  const std::int64_t b[3] = {base.x, base.y, base.z};
  const std::int64_t g = std::gcd(std::gcd(d[0], d[1]), d[2]);
  if (g != 1) throw std::invalid_argument("line direction must be primitive and nonzero");
  for (std::int64_t c : b) {
    if (c < 0 || c >= side) throw std::invalid_argument("line base must lie in the grid");
  }
  // |t| < side covers every point of a line meeting G, since d != 0.
  std::vector<LatticePoint3> out;
  for (std::int64_t t = -side; t <= side; ++t) {
    const LatticePoint3 p{b[0] + t * d[0], b[1] + t * d[1], b[2] + t * d[2]};
    if (p.x >= 0 && p.x < side && p.y >= 0 && p.y < side && p.z >= 0 && p.z < side) out.push_back(p);
  }
  return out;
}

std::vector<LatticePoint3> grid_plane_subset(int k, const LatticePoint3& normal, std::int64_t offset) {
  if (normal.x == 0 && normal.y == 0 && normal.z == 0) throw std::invalid_argument("plane normal must be nonzero");
  std::vector<LatticePoint3> out;
  for (const auto& p : grid_points(k)) {
    if (normal.x * p.x + normal.y * p.y + normal.z * p.z == offset) out.push_back(p);
  }
  return out;
}

}  // namespace densecvx
