#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "softdisc/configuration.hpp"

namespace softdisc {

// Exhaustive enumeration is limited to sizes where the free-animal count
// (about 3.6e5 at n = 12) stays tractable; larger n throws capacity_error.
inline constexpr int kEnumerationCap = 12;

// Visits every connected n-point lattice configuration exactly once up to
// translations, rotations, and reflections. Each animal is delivered as its
// canonical representative: sorted, translated to componentwise minimum 0,
// lexicographically least among its 12 isometry images.
void enumerate_lattice_animals(
    int n, const std::function<void(const std::vector<LatticePoint>&)>& visit);

std::uint64_t count_lattice_animals(int n);

struct SearchReport {
  int n = 0;
  double best_energy = 0.0;
  std::uint64_t states_visited = 0;
  std::string method;
  std::uint64_t seed = 0;
  std::vector<Configuration> best_configurations;
};

// Exact minimum over all connected n-point lattice configurations (a bond is
// worth -1 regardless of delta, so the result is delta-independent).
// best_configurations collects every minimizer, canonically represented.
SearchReport lattice_minimum(int n);

// Sequential rejection sampler: n points uniform in [0, box_side]^2 subject to
// pairwise distances >= 1. A million consecutive rejections raise
// saturation_error. Deterministic in the seed.
Configuration random_feasible_configuration(int n, double box_side, std::uint64_t seed,
                                            double delta = kDefaultDelta);

struct BasinHopParams {
  double delta = kDefaultDelta;
  double box_side = 0.0;      // <= 0: 2.5 * sqrt(n), at least 4
  int restarts = 50;
  int moves_per_restart = 0;  // <= 0: 150 * n
  double step = 0.3;          // proposal radius for single-point moves
  unsigned threads = 1;
};

// Random restarts plus greedy single-point descent. Restarts use seeds derived
// from (seed, restart index), so the result does not depend on the thread
// count. Throws invariant_error if a configuration beats the n-point spiral,
// which would disprove the crystallization bound.
SearchReport basin_hop(int n, const BasinHopParams& params, std::uint64_t seed);

}  // namespace softdisc
