#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "softdisc/bond_graph.hpp"
#include "softdisc/configuration.hpp"

using namespace softdisc;

TEST_CASE("unit lattice neighbours become bonds") {
  auto c = Configuration::from_lattice({{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
  auto g = build_bond_graph(c);
  CHECK(g.size() == 7);
  CHECK(g.edge_count() == 12);
  for (const auto& [u, v] : g.edges) {
    CHECK(u < v);
    CHECK(g.edge_length(g.edge_id(u, v)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(g.degree(0) == 6);
  for (int v = 1; v < 7; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.edge_id(1, 4) == -1);
  CHECK(connected_components(g).blocks.size() == 1);
}

TEST_CASE("edges are sorted and deduplicated") {
  auto c = Configuration::from_lattice({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  auto g = build_bond_graph(c);
  std::vector<std::pair<int, int>> want{{0, 1}, {1, 2}, {2, 3}};
  CHECK(g.edges == want);
}

TEST_CASE("adjacency lists are counterclockwise") {
  auto c = Configuration::from_lattice({{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
  auto g = build_bond_graph(c);
  const auto& ring = g.adjacency[0];
  REQUIRE(ring.size() == 6);
  auto angle = [&](int v) {
    EuclidPoint p = c.point(v);
    return std::atan2(p.y, p.x);
  };
  int descents = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    double a = angle(ring[i]);
    double b = angle(ring[(i + 1) % ring.size()]);
    if (b < a) ++descents;
  }
  CHECK(descents == 1);
}

TEST_CASE("stretched bonds stay within reach") {
  double delta = kDefaultDelta;
  auto c = Configuration::from_euclid({{0.0, 0.0}, {1.0 + delta, 0.0}, {10.0, 10.0}});
  auto g = build_bond_graph(c);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges.front() == std::pair<int, int>{0, 1});
  CHECK(g.edge_length(0) == doctest::Approx(1.0 + delta));
  CHECK(connected_components(g).blocks.size() == 2);

  auto far = Configuration::from_euclid({{0.0, 0.0}, {1.0 + delta + 1e-6, 0.0}});
  CHECK(build_bond_graph(far).edge_count() == 0);
}

TEST_CASE("overlapping points are rejected") {
  auto c = Configuration::from_euclid({{0.0, 0.0}, {3.0, 0.0}, {3.0, 0.5}});
  try {
    build_bond_graph(c);
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
    CHECK(e.distance() == doctest::Approx(0.5));
  }
}

TEST_CASE("sticky potential bonds only at contact") {
  auto c = Configuration::from_euclid({{0.0, 0.0}, {1.0, 0.0}, {2.02, 0.0}}, 0.0);
  auto g = build_bond_graph(c);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_id(0, 1) == 0);
  CHECK(g.edge_id(1, 2) == -1);
}

TEST_CASE("component blocks are sorted by least vertex") {
  auto c = Configuration::from_lattice({{0, 0}, {1, 0}, {5, 0}, {6, 0}, {20, 20}});
  auto g = build_bond_graph(c);
  auto parts = connected_components(g);
  std::vector<std::vector<int>> want{{0, 1}, {2, 3}, {4}};
  CHECK(parts.blocks == want);
  CHECK(parts.block_of[1] == 0);
  CHECK(parts.block_of[3] == 1);
  CHECK(parts.block_of[4] == 2);
}

TEST_CASE("bond graphs from feasible configurations are plane drawings") {
  auto spiral = Configuration::from_lattice([] {
    std::vector<LatticePoint> pts;
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t b = -2; b <= 2; ++b)
        if (hexnorm({a, b}) <= 2) pts.push_back({a, b});
    return pts;
  }());
  CHECK(is_planar_embedding(build_bond_graph(spiral)));
}

TEST_CASE("crossing edges are detected") {
  auto c = Configuration::from_lattice({{0, 0}, {2, 0}, {1, -1}, {1, 1}});
  BondGraph g;
  g.config = c;
  g.params = c.params();
  g.edges = {{0, 1}, {2, 3}};
  g.adjacency = {{1}, {0}, {3}, {2}};
  CHECK_FALSE(is_planar_embedding(g));
}

TEST_CASE("a bonded vertex inside another edge is not planar") {
  auto c = Configuration::from_euclid({{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}, {1.0, -1.5}});
  BondGraph g;
  g.config = c;
  g.params = c.params();
  g.edges = {{0, 1}, {2, 3}};
  g.adjacency = {{1}, {0}, {3}, {2}};
  CHECK_FALSE(is_planar_embedding(g));
}
