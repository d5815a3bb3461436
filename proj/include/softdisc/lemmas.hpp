#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "softdisc/configuration.hpp"

namespace softdisc {

// Largest admissible flattening: for z in [0, zmax(delta)] a bond chain can
// bend away from the lattice directions by z before the geometry forces a
// neighbour closer than 1. Requires 0 < delta < delta_upper_bound().
double zmax(double delta);

// Penalty balance g(z) = -1/(2 delta) + 1/(4 delta sin((1-z) pi/6)) - z,
// defined for 0 <= z <= zmax(delta). g(0) = 0, g is convex and increasing.
double g_function(double z, double delta);

// Shortest second-neighbour distance 1/(2 sin((1-z) pi/6)) forced by a chain
// flattened by z; domain 0 <= z < 1.
double min_long_bond_length(double z);

// Support function sin(a) + cos(a) tan(aj - a) = sin(aj) / cos(aj - a) of the
// widest-gap argument: decreasing on [0, aj] from tan(aj) down to its minimum
// sin(aj), equal to 2 sin(aj/2) at the half angle. Domain 0 <= a <= aj < pi/2.
double gap_support(double alpha_bar, double alpha_j);

// Star of bonds at one vertex: spoke i has length lengths[i] and direction
// angles[i], with angles strictly increasing and spanning less than 2 pi.
struct Fan {
  std::vector<double> lengths;
  std::vector<double> angles;
};

// The per-vertex charge half the outer spokes' potential, the inner spokes'
// potential in full, plus 3 alpha / pi for the angular span alpha. The crystal
// bound rests on this being >= 0 for every feasible fan, with equality only at
// unit lengths and pi/3 gaps. Throws std::domain_error for malformed or
// infeasible fans (spoke tips closer than 1).
double vertex_inequality_margin(const Fan& fan, const PotentialParams& params);

// Uniform over feasible fans: spoke count uniform in 2..6, lengths uniform in
// [1, 1+delta], directions uniform in [0, 2 pi) conditioned on feasibility.
// Gaps below the all-lengths-stretched threshold are carved out analytically;
// the remaining length-dependent condition is settled by rejection.
Fan sample_feasible_fan(std::mt19937_64& rng, const PotentialParams& params);

struct FanSurveyResult {
  std::uint64_t fans_checked = 0;
  double min_margin = 0.0;
  Fan min_margin_fan;
  std::uint64_t near_equality_count = 0;  // |margin| <= 1e-9
  bool near_equality_all_hexlike = true;  // all witnesses: unit lengths, pi/3 gaps
};

// Checks `count` sampled fans plus the five exact hexagonal fans (2..6 unit
// spokes at pi/3 gaps), tracking the smallest margin and classifying every
// near-equality witness.
FanSurveyResult fan_survey(std::uint64_t count, const PotentialParams& params,
                           std::uint64_t seed);

struct ShellingCheck {
  double lhs = 0.0;  // excess energy of the configuration
  double rhs = 0.0;  // excess energy of the peeled configuration, plus 6
  bool holds = false;
};

// Peels the boundary off a connected configuration with a simple closed
// boundary and nonempty interior, then compares excess energies: peeling can
// only lose. At equality the defect counts must agree; a mismatch raises
// invariant_error. Unmet hypotheses raise precondition_error.
ShellingCheck shelling_check(const Configuration& config, const PotentialParams& params);

}  // namespace softdisc
