#include "softdisc/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace softdisc {

namespace {

std::int64_t hexagon_size(std::int64_t s) { return 3 * s * s + 3 * s + 1; }

std::int64_t floor_isqrt(std::int64_t m) {
  auto t = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (t > 0 && t * t > m) --t;
  while ((t + 1) * (t + 1) <= m) ++t;
  return t;
}

std::int64_t ceil_isqrt(std::int64_t m) {
  std::int64_t t = floor_isqrt(m);
  return t * t == m ? t : t + 1;
}

}  // namespace

CanonicalIndex canonical_index(std::int64_t n) {
  if (n < 1) throw std::domain_error("canonical_index requires n >= 1");
  auto s = static_cast<std::int64_t>((std::sqrt(12.0 * static_cast<double>(n) - 3.0) - 3.0) / 6.0);
  if (s < 0) s = 0;
  while (hexagon_size(s + 1) <= n) ++s;
  while (s > 0 && hexagon_size(s) > n) --s;
  std::int64_t rem = n - hexagon_size(s);
  return {s, rem / (s + 1), rem % (s + 1)};
}

std::vector<LatticePoint> hexagon_points(std::int64_t s) {
  if (s < 0) throw std::domain_error("hexagon_points requires s >= 0");
  std::vector<LatticePoint> points;
  points.reserve(static_cast<std::size_t>(hexagon_size(s)));
  for (std::int64_t a = -s; a <= s; ++a) {
    for (std::int64_t b = -s; b <= s; ++b) {
      LatticePoint p{a, b};
      if (hexnorm(p) <= s) points.push_back(p);
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

Configuration canonical_configuration(std::int64_t n, double delta) {
  auto [s, k, j] = canonical_index(n);
  std::vector<LatticePoint> points = hexagon_points(s);
  auto side_point = [&](std::int64_t r, std::int64_t alpha) {
    LatticePoint p{s + 1 - alpha, alpha};
    for (std::int64_t i = 0; i < r; ++i) p = rotate60(p);
    return p;
  };
  for (std::int64_t r = 0; r < k; ++r) {
    for (std::int64_t alpha = 1; alpha <= s + 1; ++alpha) points.push_back(side_point(r, alpha));
  }
  for (std::int64_t alpha = 1; alpha <= j; ++alpha) points.push_back(side_point(k, alpha));
  return Configuration::from_lattice(std::move(points), delta);
}

std::int64_t canonical_boundary_count(std::int64_t n) {
  if (n < 1) throw std::domain_error("canonical_boundary_count requires n >= 1");
  if (n == 1) return 0;
  auto [s, k, j] = canonical_index(n);
  if (k == 0 && j == 0) return 6 * s;
  return 6 * s + k + 1;
}

std::int64_t canonical_energy(std::int64_t n) {
  if (n < 1) throw std::domain_error("canonical_energy requires n >= 1");
  if (n == 1) return 0;
  return -3 * n + canonical_boundary_count(n) + 3;
}

std::int64_t harborth_energy(std::int64_t n) {
  if (n < 1) throw std::domain_error("harborth_energy requires n >= 1");
  return -(3 * n - ceil_isqrt(12 * n - 3));
}

BoundaryGrowthCheck boundary_growth_check(std::int64_t n) {
  if (n < 2) throw std::domain_error("boundary_growth_check requires n >= 2");
  auto boundary_or_zero = [](std::int64_t m) {
    return m >= 1 ? canonical_boundary_count(m) : 0;
  };
  std::int64_t bn = canonical_boundary_count(n);
  std::int64_t m = n - bn;
  BoundaryGrowthCheck out;
  out.removal_gap = bn - boundary_or_zero(m);
  out.removal_holds = out.removal_gap <= 7;
  out.addition_holds = bn <= boundary_or_zero(m + 1) + 6;
  return out;
}

}  // namespace softdisc
