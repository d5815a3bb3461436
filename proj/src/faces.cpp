#include "softdisc/faces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace softdisc {

namespace {

int position_of(const std::vector<int>& nbrs, int u) {
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (nbrs[i] == u) return static_cast<int>(i);
  }
  return -1;
}

bool on_segment_int(const DoubledPoint& a, const DoubledPoint& b, const DoubledPoint& q) {
  if (orient(a, b, q) != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
         q.y <= std::max(a.y, b.y);
}

double point_segment_dist(const EuclidPoint& a, const EuclidPoint& b, const EuclidPoint& q) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double wx = q.x - a.x, wy = q.y - a.y;
  double vv = vx * vx + vy * vy;
  double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
  return std::hypot(wx - t * vx, wy - t * vy);
}

// Crossing-parity containment of a query point in the region bounded by a
// closed walk. Directed tree edges appear twice and cancel, so only the cycle
// part decides the parity. Points on the walk itself report "not inside".
bool strictly_inside_int(const BondGraph& g, const FaceWalk& walk, const DoubledPoint& q) {
  const auto& cfg = g.config;
  const std::size_t L = walk.vertices.size();
  for (std::size_t i = 0; i < L; ++i) {
    DoubledPoint a = doubled(cfg.lattice(walk.vertices[i]));
    DoubledPoint b = doubled(cfg.lattice(walk.vertices[(i + 1) % L]));
    if (on_segment_int(a, b, q)) return false;
  }
  bool inside = false;
  for (std::size_t i = 0; i < L; ++i) {
    DoubledPoint a = doubled(cfg.lattice(walk.vertices[i]));
    DoubledPoint b = doubled(cfg.lattice(walk.vertices[(i + 1) % L]));
    if ((a.y > q.y) == (b.y > q.y)) continue;
    std::int64_t num = (a.x - q.x) * (b.y - a.y) + (q.y - a.y) * (b.x - a.x);
    if (b.y > a.y ? num > 0 : num < 0) inside = !inside;
  }
  return inside;
}

bool strictly_inside_real(const BondGraph& g, const FaceWalk& walk, const EuclidPoint& q) {
  const auto& cfg = g.config;
  const std::size_t L = walk.vertices.size();
  for (std::size_t i = 0; i < L; ++i) {
    const EuclidPoint& a = cfg.point(walk.vertices[i]);
    const EuclidPoint& b = cfg.point(walk.vertices[(i + 1) % L]);
    if (point_segment_dist(a, b, q) <= 1e-9) return false;
  }
  bool inside = false;
  for (std::size_t i = 0; i < L; ++i) {
    const EuclidPoint& a = cfg.point(walk.vertices[i]);
    const EuclidPoint& b = cfg.point(walk.vertices[(i + 1) % L]);
    if ((a.y > q.y) == (b.y > q.y)) continue;
    double num = (a.x - q.x) * (b.y - a.y) + (q.y - a.y) * (b.x - a.x);
    if (b.y > a.y ? num > 0 : num < 0) inside = !inside;
  }
  return inside;
}

bool strictly_inside(const BondGraph& g, const FaceWalk& walk, int query_vertex, bool exact) {
  if (exact) {
    return strictly_inside_int(g, walk, doubled(g.config.lattice(query_vertex)));
  }
  return strictly_inside_real(g, walk, g.config.point(query_vertex));
}

}  // namespace

FaceDecomposition classify_faces(const BondGraph& g) {
  const int n = g.size();
  const int m = g.edge_count();
  const bool exact = g.config.all_lattice();
  FaceDecomposition d;

  ComponentPartition parts = connected_components(g);
  d.component_count = static_cast<int>(parts.blocks.size());

  auto origin = [&](int h) { return (h & 1) ? g.edges[h >> 1].second : g.edges[h >> 1].first; };
  auto target = [&](int h) { return (h & 1) ? g.edges[h >> 1].first : g.edges[h >> 1].second; };
  auto next_halfedge = [&](int h) {
    int v = target(h);
    const auto& nbrs = g.adjacency[v];
    int pos = position_of(nbrs, origin(h));
    int deg = static_cast<int>(nbrs.size());
    int w = nbrs[(pos + deg - 1) % deg];
    int e2 = g.edge_id(v, w);
    return v < w ? 2 * e2 : 2 * e2 + 1;
  };

  std::vector<int> walk_of(static_cast<std::size_t>(2) * m, -1);
  for (int h0 = 0; h0 < 2 * m; ++h0) {
    if (walk_of[h0] != -1) continue;
    FaceWalk walk;
    int id = static_cast<int>(d.walks.size());
    int h = h0;
    do {
      walk_of[h] = id;
      walk.vertices.push_back(origin(h));
      h = next_halfedge(h);
    } while (h != h0);

    const std::size_t L = walk.vertices.size();
    double area2 = 0.0;
    std::int64_t area2_int = 0;
    for (std::size_t i = 0; i < L; ++i) {
      int u = walk.vertices[i];
      int v = walk.vertices[(i + 1) % L];
      const EuclidPoint& p = g.config.point(u);
      const EuclidPoint& q = g.config.point(v);
      area2 += p.x * q.y - p.y * q.x;
      if (exact) {
        DoubledPoint dp = doubled(g.config.lattice(u));
        DoubledPoint dq = doubled(g.config.lattice(v));
        area2_int += dp.x * dq.y - dp.y * dq.x;
      }
    }
    walk.area = 0.5 * area2;
    walk.ccw = exact ? area2_int > 0 : area2 > 1e-7;
    walk.component = parts.block_of[walk.vertices[0]];
    d.walks.push_back(std::move(walk));
  }

  // A CCW walk bounds a genuine face unless some other component lies inside
  // its region. Components are connected and edge-disjoint from the walk, so
  // testing one representative vertex per component decides containment.
  const int k = d.component_count;
  std::vector<int> parent_comp(k, -1);  // component owning the innermost walk around c
  std::vector<double> parent_area(k, std::numeric_limits<double>::infinity());
  for (auto& walk : d.walks) {
    if (!walk.ccw) continue;
    walk.genuine = true;
    if (k == 1) continue;
    for (int c = 0; c < k; ++c) {
      if (c == walk.component) continue;
      if (strictly_inside(g, walk, parts.blocks[c][0], exact)) {
        walk.genuine = false;
        double a = std::abs(walk.area);
        if (a < parent_area[c]) {
          parent_area[c] = a;
          parent_comp[c] = walk.component;
        }
      }
    }
  }

  std::vector<int> depth(k, -1);
  auto component_depth = [&](auto&& self, int c) -> int {
    if (depth[c] != -1) return depth[c];
    depth[c] = parent_comp[c] == -1 ? 0 : 1 + self(self, parent_comp[c]);
    return depth[c];
  };
  for (int c = 0; c < k; ++c) d.nesting_depth = std::max(d.nesting_depth, component_depth(component_depth, c));

  for (std::size_t w = 0; w < d.walks.size(); ++w) {
    if (!d.walks[w].genuine) continue;
    Face f;
    f.walk = static_cast<int>(w);
    f.perimeter = static_cast<int>(d.walks[w].vertices.size());
    f.area = d.walks[w].area;
    if (f.perimeter < 3) throw invariant_error("bounded face with fewer than 3 edges");
    d.defect += f.perimeter - 3;
    d.faces.push_back(std::move(f));
  }

  d.edge_class.resize(m);
  std::vector<char> on_boundary(n, 0);
  for (int e = 0; e < m; ++e) {
    int w0 = walk_of[2 * e];
    int w1 = walk_of[2 * e + 1];
    bool g0 = d.walks[w0].genuine;
    bool g1 = d.walks[w1].genuine;
    EdgeClass cls;
    if (g0 && g1) {
      cls = (w0 == w1) ? EdgeClass::wire_int : EdgeClass::interior;
    } else if (g0 || g1) {
      cls = EdgeClass::boundary;
    } else {
      cls = EdgeClass::wire_ext;
    }
    d.edge_class[e] = cls;
    if (cls == EdgeClass::boundary) d.per_gr += 1;
    if (cls == EdgeClass::wire_ext) d.per_gr += 2;
    if (cls == EdgeClass::boundary || cls == EdgeClass::wire_ext) {
      on_boundary[g.edges[e].first] = 1;
      on_boundary[g.edges[e].second] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (on_boundary[v]) d.boundary_vertices.push_back(v);
  }
  d.euler_characteristic = n - m + static_cast<int>(d.faces.size());
  return d;
}

bool has_simple_closed_boundary(const BondGraph& g, const FaceDecomposition& d) {
  if (d.faces.empty()) return false;
  std::vector<int> boundary_edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    switch (d.edge_class[e]) {
      case EdgeClass::wire_int:
      case EdgeClass::wire_ext:
        return false;
      case EdgeClass::boundary:
        boundary_edges.push_back(e);
        break;
      case EdgeClass::interior:
        break;
    }
  }
  if (boundary_edges.empty()) return false;

  std::vector<std::vector<int>> bnd_adj(g.size());
  for (int e : boundary_edges) {
    bnd_adj[g.edges[e].first].push_back(g.edges[e].second);
    bnd_adj[g.edges[e].second].push_back(g.edges[e].first);
  }
  for (int v : d.boundary_vertices) {
    if (bnd_adj[v].size() != 2) return false;
  }
  // One cycle: walk from any boundary vertex and count what we can reach.
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{d.boundary_vertices.front()};
  seen[stack.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : bnd_adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return reached == d.boundary_vertices.size() &&
         boundary_edges.size() == d.boundary_vertices.size();
}

}  // namespace softdisc
