#include <doctest.h>

#include "densecvx/geometry_checks.hpp"
#include "densecvx/lattice.hpp"
#include "densecvx/pointset_gen.hpp"

#include <cmath>
#include <set>

using namespace densecvx;

namespace {

// Direct evaluation of the bit-sum encoding, independent of the library.
Rational reference_eps(std::uint64_t n, const Rational& eps) {
  Rational out = 0, term = eps;
  for (; n != 0; n >>= 1, term *= eps)
    if (n & 1) out += term;
  return out;
}

// Every point of `a` strictly below every line through two points of `b`,
// and every point of `b` strictly above every line through two points of `a`.
bool reference_deep_below(const std::vector<RationalPoint2>& a, const std::vector<RationalPoint2>& b) {
  auto side = [](const RationalPoint2& p, const RationalPoint2& q, const RationalPoint2& r) {
    // Sign of r.y minus the line through p, q evaluated at r.x.
    const Rational y = p.y + (q.y - p.y) * (r.x - p.x) / (q.x - p.x);
    return sgn(r.y - y);
  };
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      for (const auto& p : a)
        if (side(b[i], b[j], p) >= 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (const auto& p : b)
        if (side(a[i], a[j], p) <= 0) return false;
  return true;
}

double dist(const RationalPoint3& a, const RationalPoint3& b) {
  const double dx = Rational(a.x - b.x).get_d(), dy = Rational(a.y - b.y).get_d(), dz = Rational(a.z - b.z).get_d();
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

TEST_CASE("binary eps examples") {
  CHECK(binary_eps(std::uint64_t{0}, Rational(1, 3)) == 0);
  CHECK(binary_eps(std::uint64_t{5}, Rational(1, 4)) == Rational(17, 64));
  CHECK(binary_eps(std::uint64_t{3}, Rational(1, 8)) == Rational(9, 64));
  CHECK(binary_eps(BigInt(5), Rational(1, 4)) == Rational(17, 64));
  CHECK_THROWS_AS(binary_eps(std::uint64_t{1}, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(binary_eps(std::uint64_t{1}, Rational(0)), std::invalid_argument);
}

TEST_CASE("binary eps stays below 2 eps and is injective") {
  for (const Rational& eps : {Rational(1, 4), Rational(1, 3), Rational(1, 64)}) {
    std::set<Rational> seen;
    for (std::uint64_t n = 0; n < 1024; ++n) {
      const Rational v = binary_eps(n, eps);
      CHECK(v == reference_eps(n, eps));
      CHECK(v < 2 * eps);
      CHECK(seen.insert(v).second);
    }
  }
}

TEST_CASE("Horton set examples") {
  const auto one = horton_set_2d(1, Rational(1, 8));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RationalPoint2{1, Rational(1, 8)});

  const auto four = horton_set_2d(4, Rational(1, 8));
  const std::vector<double> expected{0.125, 0.015625, 0.140625, 0.001953125};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(four[i].x == Rational(static_cast<long>(i + 1)));
    CHECK(four[i].y.get_d() == expected[i]);
  }
  // Even positions i = 2, 4 form the lower set.
  const std::vector<RationalPoint2> even{four[1], four[3]}, odd{four[0], four[2]};
  CHECK(check_deep_below(even, odd));
  CHECK(reference_deep_below(even, odd));
  CHECK_FALSE(check_deep_below(odd, even));
}

TEST_CASE("deep-below relation") {
  const std::vector<RationalPoint2> a{{0, 0}, {2, Rational(1, 100)}};
  const std::vector<RationalPoint2> b{{1, 5}, {3, Rational(501, 100)}};
  CHECK(check_deep_below(a, b));
  CHECK(reference_deep_below(a, b));
  CHECK_FALSE(check_deep_below(b, a));
  const std::vector<RationalPoint2> clash{{0, 7}, {5, 9}};
  CHECK_THROWS_AS(check_deep_below(a, clash), std::invalid_argument);
}

TEST_CASE("Horton sets satisfy the recursive property") {
  for (std::size_t n : {2u, 5u, 8u, 16u, 33u}) CHECK(is_horton(horton_set_2d(n)));
  // Points on a parabola are in convex position and so cannot be Horton.
  const std::vector<RationalPoint2> parabola{{1, 1}, {2, 4}, {3, 9}, {4, 16}};
  CHECK_FALSE(is_horton(parabola));
}

TEST_CASE("recursive splits of a Horton set agree with the reference check") {
  const auto pts = horton_set_2d(8, Rational(1, 64));
  std::vector<std::vector<RationalPoint2>> level{pts};
  while (level.front().size() > 1) {
    std::vector<std::vector<RationalPoint2>> next;
    for (const auto& s : level) {
      std::vector<RationalPoint2> e, o;
      for (std::size_t i = 0; i < s.size(); ++i) (i % 2 == 0 ? o : e).push_back(s[i]);
      CHECK((reference_deep_below(e, o) || reference_deep_below(o, e)));
      next.push_back(e);
      next.push_back(o);
    }
    level = std::move(next);
  }
}

TEST_CASE("perturbation map on unit vectors") {
  const Rational eps(1, 256);
  const PerturbationParams params{1, eps, 3};
  const RationalPoint3 zero(0, 0, 0);
  CHECK(phi_perturb({0, 0, 0}, params, zero) == zero);
  CHECK(phi_perturb({1, 0, 0}, params, zero) == RationalPoint3(1, eps, pow(eps, 2)));
  CHECK(phi_perturb({0, 1, 0}, params, zero) == RationalPoint3(pow(eps, 3), 1, pow(eps, 5)));
}

TEST_CASE("perturbation map matches the summation formula") {
  const auto params = PerturbationParams::with_default_epsilon(2, 9);
  const Rational& eps = params.epsilon;
  const int k = params.k;
  for (const auto& p : grid_points(2)) {
    const std::int64_t c[3] = {p.x, p.y, p.z};
    Rational out[3] = {Rational(c[0]), Rational(c[1]), Rational(c[2])};
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j)
          out[j - 1] += pow(eps, static_cast<unsigned long>((3 * i + j - 5) * k)) *
                        reference_eps(static_cast<std::uint64_t>(c[i - 1]), eps);
    const auto u = perturbation_noise(p, params.seed);
    const Rational w = pow(eps, static_cast<unsigned long>(7 * k));
    const RationalPoint3 expected(out[0] + w * u.x, out[1] + w * u.y, out[2] + w * u.z);
    CHECK(phi_perturb(p, params) == expected);
  }
}

TEST_CASE("perturbed grid stays close to the grid") {
  SUBCASE("k = 1 within 4 eps sqrt 3") {
    const auto params = PerturbationParams::with_default_epsilon(1, 5);
    const auto cloud = perturbed_grid(params);
    REQUIRE(cloud.size() == 8);
    const auto grid = grid_points(1);
    const double bound = 4 * params.epsilon.get_d() * std::sqrt(3.0);
    for (std::size_t i = 0; i < 8; ++i) CHECK(dist(cloud[i], grid[i].to_rational()) <= bound);
  }
  SUBCASE("k = 2, 3 within 15 eps and nearest-point bijection") {
    for (int k : {2, 3}) {
      const auto params = PerturbationParams::with_default_epsilon(k, 5);
      const auto cloud = perturbed_grid(params);
      const auto grid = grid_points(k);
      REQUIRE(cloud.size() == grid.size());
      const double eps = params.epsilon.get_d();
      std::set<LatticePoint3> hit;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(dist(cloud[i], grid[i].to_rational()) < 15 * eps);
        const auto& q = cloud[i];
        hit.insert({std::lround(q.x.get_d()), std::lround(q.y.get_d()), std::lround(q.z.get_d())});
      }
      CHECK(hit.size() == grid.size());
    }
  }
}

TEST_CASE("perturbed grid is deterministic and seed dependent") {
  const auto a = perturbed_grid(PerturbationParams::with_default_epsilon(2, 42));
  const auto b = perturbed_grid(PerturbationParams::with_default_epsilon(2, 42));
  const auto c = perturbed_grid(PerturbationParams::with_default_epsilon(2, 43));
  CHECK(a.points() == b.points());
  CHECK(a.points() != c.points());
}

TEST_CASE("perturbed grid spread") {
  const auto cloud = perturbed_grid(PerturbationParams::with_default_epsilon(2, 1));
  const auto rep = spread(cloud);
  // Diagonal 3 sqrt 3 over unit step, normalized by n^{1/3} = 4.
  CHECK(rep.normalized_spread == doctest::Approx(3.0 * std::sqrt(3.0) / 4.0).epsilon(0.01));
}

TEST_CASE("perturbed grid is in general position at small k") {
  CHECK(is_general_position(perturbed_grid(PerturbationParams::with_default_epsilon(1, 1))).ok);
  CHECK(is_general_position(perturbed_grid(PerturbationParams::with_default_epsilon(1, 77))).ok);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(PerturbationParams::with_default_epsilon(3, 0).validate());
  CHECK_THROWS_AS((PerturbationParams{2, Rational(1, 100), 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PerturbationParams{0, Rational(1, 1024), 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PerturbationParams{1, Rational(0), 0}.validate()), std::invalid_argument);
}

TEST_CASE("grid line subsets") {
  CHECK(grid_line_subset(3, {1, 0, 0}, {0, 0, 0}).size() == 8);
  CHECK(grid_line_subset(3, {1, 1, 1}, {0, 0, 0}).size() == 8);
  const auto sloped = grid_line_subset(3, {2, 1, 0}, {0, 0, 0});
  REQUIRE(sloped.size() == 4);
  CHECK(sloped.back() == LatticePoint3{6, 3, 0});
  CHECK_THROWS_AS(grid_line_subset(3, {2, 2, 0}, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(grid_line_subset(3, {1, 0, 0}, {8, 0, 0}), std::invalid_argument);
}

TEST_CASE("grid plane subsets") {
  CHECK(grid_plane_subset(2, {0, 0, 1}, 0).size() == 16);
  // x + y + z = 3 in {0..3}^3 has C(5,2) = 10 points.
  CHECK(grid_plane_subset(2, {1, 1, 1}, 3).size() == 10);
}

TEST_CASE("random ball cloud keeps unit spacing") {
  const auto cloud = random_ball_cloud(200, 4);
  CHECK(cloud.size() == 200);
  const double radius = std::cbrt(200.0);
  const auto& pts = cloud.approx();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(norm(pts[i]) <= radius + 1e-12);
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(norm(pts[i] - pts[j]) >= 1.0 - 1e-12);
  }
}

TEST_CASE("negligibility of the perturbation") {
  SUBCASE("exhaustive at k = 1") {
    const auto rep = negligibility_check(PerturbationParams::with_default_epsilon(1, 1), 0, 0);
    CHECK(rep.tetrahedra > 0);
    CHECK(rep.violations == 0);
  }
  SUBCASE("sampled at k = 2") {
    const auto rep = negligibility_check(PerturbationParams::with_default_epsilon(2, 1), 5000, 3);
    CHECK(rep.interior_pairs > 0);
    CHECK(rep.violations == 0);
  }
}
