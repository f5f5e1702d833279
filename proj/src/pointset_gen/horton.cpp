#include "densecvx/pointset_gen.hpp"
#include "densecvx/predicates.hpp"

#include <algorithm>
#include <stdexcept>

namespace densecvx {

Rational binary_eps(const BigInt& n, const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= Rational(1, 2)) throw std::invalid_argument("binary_eps needs 0 < eps < 1/2");
  if (sgn(n) < 0) throw std::invalid_argument("binary_eps needs a nonnegative integer");
  Rational sum = 0;
  Rational power = eps;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) sum += power;
    power *= eps;
  }
  return sum;
}

Rational binary_eps(std::uint64_t n, const Rational& eps) {
  BigInt big;
  mpz_import(big.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return binary_eps(big, eps);
}

Rational default_horton_epsilon(std::size_t n) {
  long bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return pow2(-(bits + 4));
}

std::vector<RationalPoint2> horton_set_2d(std::size_t n, const Rational& eps) {
  if (n == 0) throw std::invalid_argument("horton_set_2d needs n >= 1");
  std::vector<RationalPoint2> out;
  out.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) out.push_back({Rational(static_cast<unsigned long>(i)), binary_eps(i, eps)});
  return out;
}

std::vector<RationalPoint2> horton_set_2d(std::size_t n) { return horton_set_2d(n, default_horton_epsilon(n)); }

namespace {

// Lines through two points of `line_set`; every point of `probe` must lie
// on side `want` (+1 above, -1 below).
bool all_on_side(std::span<const RationalPoint2> line_set, std::span<const RationalPoint2> probe, int want) {
  for (std::size_t i = 0; i < line_set.size(); ++i) {
    for (std::size_t j = i + 1; j < line_set.size(); ++j) {
      const auto* lo = &line_set[i];
      const auto* hi = &line_set[j];
      if (hi->x < lo->x) std::swap(lo, hi);
      for (const auto& q : probe) {
        if (orient2d(*lo, *hi, q) != want) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_deep_below(std::span<const RationalPoint2> a, std::span<const RationalPoint2> b) {
  std::vector<Rational> xs;
  xs.reserve(a.size() + b.size());
  for (const auto& p : a) xs.push_back(p.x);
  for (const auto& p : b) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw std::invalid_argument("check_deep_below needs distinct x-coordinates");
  }
  return all_on_side(b, a, -1) && all_on_side(a, b, +1);
}

bool is_horton(std::span<const RationalPoint2> points) {
  if (points.size() <= 1) return true;
  std::vector<RationalPoint2> even, odd;
  for (std::size_t i = 0; i < points.size(); ++i) (i % 2 == 0 ? even : odd).push_back(points[i]);
  if (!check_deep_below(even, odd) && !check_deep_below(odd, even)) return false;
  return is_horton(even) && is_horton(odd);
}

}  // namespace densecvx
