#pragma once

#include "softdisc/bond_graph.hpp"
#include "softdisc/configuration.hpp"
#include "softdisc/faces.hpp"

namespace softdisc {

// Finite-or-plus-infinity value. Infinity is a tag, never a sentinel double.
struct ExtReal {
  bool finite = true;
  double value = 0.0;

  static ExtReal infinity() { return {false, 0.0}; }
  static ExtReal of(double v) { return {true, v}; }

  friend bool operator==(const ExtReal&, const ExtReal&) = default;
};

// Pair potential: hard core below 1, linear well -1 + (r-1)/delta on
// [1, 1+delta], zero beyond. With delta = 0 the well degenerates to contact
// adhesion: exactly -1 within bond_tol of distance 1. Distances inside the
// tolerance bands are clamped to the ideal interval first, so tolerances
// never leak into energy values.
ExtReal potential_value(double r, const PotentialParams& params);

// Sum of the pair potential over all pairs.
ExtReal total_energy(const Configuration& config, const PotentialParams& params);

inline ExtReal total_energy(const Configuration& config) {
  return total_energy(config, config.params());
}

// Sum of (r-1)/delta over bonds, distances clamped to [1, 1+delta].
// Identically zero when delta = 0.
double elastic_energy(const BondGraph& graph);

// Sum over bounded faces of (perimeter - 3): the non-triangle defect.
inline int defect_measure(const FaceDecomposition& d) { return d.defect; }

struct EnergyBreakdown {
  int n = 0;
  double total = 0.0;
  int bond_count = 0;
  int per_gr = 0;
  int defect = 0;
  int euler_characteristic = 0;
  double elastic = 0.0;
  double excess = 0.0;  // per_gr + defect + 3*chi + elastic
  double residual = 0.0;  // total - (-3n + excess); identically ~0
  int face_count = 0;
  int wire_count = 0;  // edges on no face (wire_ext) or doubled in one (wire_int)
  int boundary_count = 0;
  int component_count = 0;
  int nesting_depth = 0;
  bool simple_closed_boundary = false;
};

// Full decomposition of a feasible configuration. Throws infeasible_error on
// hard-core violations.
EnergyBreakdown decompose(const Configuration& config, const PotentialParams& params);

inline EnergyBreakdown decompose(const Configuration& config) {
  return decompose(config, config.params());
}

}  // namespace softdisc
