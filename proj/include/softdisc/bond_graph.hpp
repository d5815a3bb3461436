#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "softdisc/configuration.hpp"

namespace softdisc {

// Contact graph of a feasible configuration: vertices are the points, edges
// the pairs whose distance falls in [1 - hard_tol, 1 + delta + bond_tol].
// Adjacency lists are sorted counterclockwise around each vertex (exactly, for
// lattice vertices), which makes the graph a combinatorial planar embedding.
struct BondGraph {
  Configuration config;
  PotentialParams params;
  std::vector<std::pair<int, int>> edges;   // u < v, lexicographically sorted
  std::vector<std::vector<int>> adjacency;  // neighbour ids in CCW order

  int size() const { return static_cast<int>(config.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  // Index into edges, or -1 when (u, v) is not an edge.
  int edge_id(int u, int v) const;

  // Embedded length of edge e (unclamped).
  double edge_length(int e) const;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

// Throws infeasible_error (with the offending pair) if two points are closer
// than 1 - hard_tol, and invariant_error if a vertex ends up with more than
// six bonds, which the range bound on delta rules out.
BondGraph build_bond_graph(const Configuration& config, const PotentialParams& params);

inline BondGraph build_bond_graph(const Configuration& config) {
  return build_bond_graph(config, config.params());
}

// True when no two edges cross and no bonded vertex lies in the interior of
// another edge: the straight-line drawing is a plane graph. Quadratic scan,
// intended for verification rather than hot paths.
bool is_planar_embedding(const BondGraph& graph);

struct ComponentPartition {
  std::vector<std::vector<int>> blocks;  // each sorted; ordered by least vertex
  std::vector<int> block_of;             // vertex id -> block index
};

ComponentPartition connected_components(const BondGraph& graph);

}  // namespace softdisc
