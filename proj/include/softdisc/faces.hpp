#pragma once

#include <vector>

#include "softdisc/bond_graph.hpp"

namespace softdisc {

enum class EdgeClass {
  interior,  // shared by two distinct bounded faces
  boundary,  // on exactly one bounded face
  wire_int,  // traversed twice by the same bounded face walk (bridge in a face)
  wire_ext,  // on no bounded face
};

// One closed walk of the rotation system (the combinatorial embedding given by
// the CCW adjacency lists). vertices[i] -> vertices[i+1 mod L] are directed
// edges; every directed edge of the graph lies on exactly one walk.
struct FaceWalk {
  std::vector<int> vertices;
  int component = 0;
  double area = 0.0;  // signed shoelace area
  bool ccw = false;   // positive area: the walk bounds a candidate face
  bool genuine = false;
};

struct Face {
  int walk = -1;       // index into FaceDecomposition::walks
  int perimeter = 0;   // directed edges along the walk; bridges count twice
  double area = 0.0;
};

struct FaceDecomposition {
  std::vector<FaceWalk> walks;
  std::vector<Face> faces;  // the genuine bounded faces, in walk order
  std::vector<EdgeClass> edge_class;
  int per_gr = 0;                      // #boundary + 2 * #wire_ext
  int defect = 0;                      // sum over faces of (perimeter - 3)
  int euler_characteristic = 0;        // V - E + #faces
  std::vector<int> boundary_vertices;  // endpoints of boundary/wire_ext edges
  int component_count = 0;
  int nesting_depth = 0;  // 0: no component enclosed by another
};

// Computes the bounded faces of the straight-line drawing from the rotation
// system alone, except that for disconnected graphs a CCW walk enclosing a
// different component is demoted (its edges become wires for the counts).
// Containment tests are exact for all-lattice configurations.
FaceDecomposition classify_faces(const BondGraph& graph);

// True when the graph has at least one face, no wire edges, and its boundary
// edges form a single simple cycle.
bool has_simple_closed_boundary(const BondGraph& graph, const FaceDecomposition& decomposition);

}  // namespace softdisc
