#include "softdisc/energy.hpp"

#include <algorithm>
#include <cmath>

namespace softdisc {

ExtReal potential_value(double r, const PotentialParams& params) {
  validate(params);
  if (r < 1.0 - params.hard_tol) return ExtReal::infinity();
  if (params.delta == 0.0) {
    return ExtReal::of(r <= 1.0 + params.bond_tol ? -1.0 : 0.0);
  }
  if (r > 1.0 + params.delta + params.bond_tol) return ExtReal::of(0.0);
  double clamped = std::clamp(r, 1.0, 1.0 + params.delta);
  return ExtReal::of(-1.0 + (clamped - 1.0) / params.delta);
}

ExtReal total_energy(const Configuration& config, const PotentialParams& params) {
  validate(params);
  const double reach = 1.0 + params.delta + params.bond_tol;
  double sum = 0.0;
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (config.is_lattice(i) && config.is_lattice(j)) {
        // Lattice pair distances are 1, sqrt(3), 2, ...; only contact binds.
        if (lattice_dist2(config.lattice(i), config.lattice(j)) == 1) sum += -1.0;
        continue;
      }
      double d = dist(config.point(i), config.point(j));
      if (d < 1.0 - params.hard_tol) return ExtReal::infinity();
      if (d > reach) continue;
      if (params.delta == 0.0) {
        sum += -1.0;
      } else {
        double clamped = std::clamp(d, 1.0, 1.0 + params.delta);
        sum += -1.0 + (clamped - 1.0) / params.delta;
      }
    }
  }
  return ExtReal::of(sum);
}

double elastic_energy(const BondGraph& graph) {
  if (graph.params.delta == 0.0) return 0.0;
  double sum = 0.0;
  for (int e = 0; e < graph.edge_count(); ++e) {
    double r = std::clamp(graph.edge_length(e), 1.0, 1.0 + graph.params.delta);
    sum += (r - 1.0) / graph.params.delta;
  }
  return sum;
}

EnergyBreakdown decompose(const Configuration& config, const PotentialParams& params) {
  BondGraph graph = build_bond_graph(config, params);
  FaceDecomposition d = classify_faces(graph);

  EnergyBreakdown b;
  b.n = static_cast<int>(config.size());
  b.bond_count = graph.edge_count();
  b.per_gr = d.per_gr;
  b.defect = d.defect;
  b.euler_characteristic = d.euler_characteristic;
  b.elastic = elastic_energy(graph);
  b.excess = b.per_gr + b.defect + 3.0 * b.euler_characteristic + b.elastic;
  ExtReal total = total_energy(config, params);
  if (!total.finite) {
    throw invariant_error("bond graph built but total energy infinite");
  }
  b.total = total.value;
  b.residual = b.total - (-3.0 * b.n + b.excess);
  b.face_count = static_cast<int>(d.faces.size());
  for (EdgeClass cls : d.edge_class) {
    if (cls == EdgeClass::wire_int || cls == EdgeClass::wire_ext) ++b.wire_count;
  }
  b.boundary_count = static_cast<int>(d.boundary_vertices.size());
  b.component_count = d.component_count;
  b.nesting_depth = d.nesting_depth;
  b.simple_closed_boundary = has_simple_closed_boundary(graph, d);
  return b;
}

}  // namespace softdisc
