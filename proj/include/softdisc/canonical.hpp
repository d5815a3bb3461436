#pragma once

#include <cstdint>
#include <vector>

#include "softdisc/configuration.hpp"

namespace softdisc {

// Spiral address of n: the largest complete hexagon radius s with
// 3s^2 + 3s + 1 <= n, the number k of complete extra sides, and the length j
// of the partial side, so n = 3s^2 + 3s + 1 + k(s+1) + j with 0 <= k <= 5 and
// 0 <= j <= s (j < s+1; a full final side rolls over into k).
struct CanonicalIndex {
  std::int64_t s = 0;
  std::int64_t k = 0;
  std::int64_t j = 0;
};

CanonicalIndex canonical_index(std::int64_t n);  // n >= 1

// All lattice points with hexagonal norm <= s, sorted. 3s^2 + 3s + 1 of them.
std::vector<LatticePoint> hexagon_points(std::int64_t s);

// The n-point hexagonal spiral: the full hexagon of radius s, then k complete
// sides of the next shell counterclockwise, then j points of the next side.
Configuration canonical_configuration(std::int64_t n, double delta = kDefaultDelta);

// Number of boundary points of the n-point spiral: 0 for n = 1, 6s for full
// hexagons, 6s + k + 1 otherwise.
std::int64_t canonical_boundary_count(std::int64_t n);

// Energy of the n-point spiral: 0 for n = 1, -3n + boundary + 3 otherwise.
std::int64_t canonical_energy(std::int64_t n);

// Closed form -(3n - ceil(sqrt(12n - 3))) for the minimum bond-count energy
// of n hard unit discs; agrees with canonical_energy for every n.
std::int64_t harborth_energy(std::int64_t n);

struct BoundaryGrowthCheck {
  // With m = n - boundary(n) the number of non-boundary points:
  bool removal_holds = false;  // boundary(n) <= boundary(m) + 7
  bool addition_holds = false; // boundary(n) <= boundary(m + 1) + 6
  std::int64_t removal_gap = 0;  // boundary(n) - boundary(m)
};

// Checks the two shell-growth inequalities for n >= 2 (boundary(0) := 0).
// Throws std::domain_error for n < 2. Fails only at n = 9, with gap 8.
BoundaryGrowthCheck boundary_growth_check(std::int64_t n);

}  // namespace softdisc
