#include "softdisc/bond_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace softdisc {

namespace {

std::int64_t cell_key(std::int64_t cx, std::int64_t cy) {
  return cx * 0x100000001LL + cy;  // injective for |cx|, |cy| < 2^31
}

}  // namespace

int BondGraph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

double BondGraph::edge_length(int e) const {
  const auto& [u, v] = edges[e];
  if (config.is_lattice(u) && config.is_lattice(v)) {
    return std::sqrt(static_cast<double>(lattice_dist2(config.lattice(u), config.lattice(v))));
  }
  return dist(config.point(u), config.point(v));
}

BondGraph build_bond_graph(const Configuration& config, const PotentialParams& params) {
  validate(params);
  BondGraph g;
  g.config = config;
  g.params = params;
  const int n = g.size();
  g.adjacency.assign(n, {});

  const double reach = 1.0 + params.delta + params.bond_tol;
  const double cell = reach * 1.0000001;
  std::unordered_map<std::int64_t, std::vector<int>> grid;
  grid.reserve(static_cast<std::size_t>(n) * 2);
  auto cell_of = [&](const EuclidPoint& p) {
    return std::pair<std::int64_t, std::int64_t>{
        static_cast<std::int64_t>(std::floor(p.x / cell)),
        static_cast<std::int64_t>(std::floor(p.y / cell))};
  };
  for (int i = 0; i < n; ++i) {
    auto [cx, cy] = cell_of(config.point(i));
    grid[cell_key(cx, cy)].push_back(i);
  }

  for (int i = 0; i < n; ++i) {
    auto [cx, cy] = cell_of(config.point(i));
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(cell_key(cx + dx, cy + dy));
        if (it == grid.end()) continue;
        for (int j : it->second) {
          if (j <= i) continue;
          bool bonded;
          if (config.is_lattice(i) && config.is_lattice(j)) {
            // Lattice distances are sqrt of 0,1,3,4,7,...; only 1 is in range.
            bonded = lattice_dist2(config.lattice(i), config.lattice(j)) == 1;
          } else {
            double d = dist(config.point(i), config.point(j));
            if (d < 1.0 - params.hard_tol) throw infeasible_error(i, j, d);
            bonded = d <= reach;
          }
          if (bonded) g.edges.emplace_back(i, j);
        }
      }
    }
  }

  std::sort(g.edges.begin(), g.edges.end());
  for (const auto& [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }

  for (int v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency[v];
    if (nbrs.size() > 6) {
      throw invariant_error("vertex " + std::to_string(v) + " has " +
                            std::to_string(nbrs.size()) + " bonds; delta out of range?");
    }
    bool exact = config.is_lattice(v);
    if (exact) {
      for (int u : nbrs) exact = exact && config.is_lattice(u);
    }
    if (exact) {
      std::sort(nbrs.begin(), nbrs.end(), [&](int p, int q) {
        LatticePoint dp{config.lattice(p).a - config.lattice(v).a,
                        config.lattice(p).b - config.lattice(v).b};
        LatticePoint dq{config.lattice(q).a - config.lattice(v).a,
                        config.lattice(q).b - config.lattice(v).b};
        if (angular_less(dp, dq)) return true;
        if (angular_less(dq, dp)) return false;
        return p < q;
      });
    } else {
      std::sort(nbrs.begin(), nbrs.end(), [&](int p, int q) {
        EuclidPoint dp{config.point(p).x - config.point(v).x,
                       config.point(p).y - config.point(v).y};
        EuclidPoint dq{config.point(q).x - config.point(v).x,
                       config.point(q).y - config.point(v).y};
        if (angular_less(dp, dq)) return true;
        if (angular_less(dq, dp)) return false;
        return p < q;
      });
    }
  }
  return g;
}

namespace {

template <typename Pt, typename Scalar>
bool open_segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d,
                             Scalar (*orient3)(const Pt&, const Pt&, const Pt&)) {
  Scalar d1 = orient3(c, d, a);
  Scalar d2 = orient3(c, d, b);
  Scalar d3 = orient3(a, b, c);
  Scalar d4 = orient3(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  auto strictly_between = [](const Pt& p, const Pt& q, const Pt& r) {
    // Collinearity already established; is r strictly inside segment pq?
    if (p.x != q.x) return (p.x < r.x && r.x < q.x) || (q.x < r.x && r.x < p.x);
    return (p.y < r.y && r.y < q.y) || (q.y < r.y && r.y < p.y);
  };
  if (d3 == 0 && strictly_between(a, b, c)) return true;
  if (d4 == 0 && strictly_between(a, b, d)) return true;
  if (d1 == 0 && strictly_between(c, d, a)) return true;
  if (d2 == 0 && strictly_between(c, d, b)) return true;
  return false;
}

std::int64_t orient_i(const DoubledPoint& a, const DoubledPoint& b, const DoubledPoint& c) {
  return orient(a, b, c);
}
double orient_d(const EuclidPoint& a, const EuclidPoint& b, const EuclidPoint& c) {
  return orient(a, b, c);
}

}  // namespace

bool is_planar_embedding(const BondGraph& graph) {
  const auto& cfg = graph.config;
  const bool exact = cfg.all_lattice();
  const int m = graph.edge_count();
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = graph.edges[e];
      auto [c, d] = graph.edges[f];
      if (a == c || a == d || b == c || b == d) continue;
      bool hit;
      if (exact) {
        hit = open_segments_intersect<DoubledPoint, std::int64_t>(
            doubled(cfg.lattice(a)), doubled(cfg.lattice(b)), doubled(cfg.lattice(c)),
            doubled(cfg.lattice(d)), orient_i);
      } else {
        hit = open_segments_intersect<EuclidPoint, double>(cfg.point(a), cfg.point(b),
                                                           cfg.point(c), cfg.point(d), orient_d);
      }
      if (hit) return false;
    }
  }
  return true;
}

ComponentPartition connected_components(const BondGraph& graph) {
  const int n = graph.size();
  ComponentPartition parts;
  parts.block_of.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (parts.block_of[s] != -1) continue;
    int id = static_cast<int>(parts.blocks.size());
    std::vector<int> block;
    std::vector<int> stack{s};
    parts.block_of[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (int u : graph.adjacency[v]) {
        if (parts.block_of[u] == -1) {
          parts.block_of[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    parts.blocks.push_back(std::move(block));
  }
  return parts;
}

}  // namespace softdisc
