#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "softdisc/canonical.hpp"
#include "softdisc/configuration.hpp"
#include "softdisc/energy.hpp"
#include "softdisc/search.hpp"

using namespace softdisc;

TEST_CASE("free animal counts") {
  std::vector<std::uint64_t> want{1, 1, 3, 7, 22, 82, 333, 1448};
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_lattice_animals(n) == want[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("enumeration delivers canonical forms exactly once") {
  std::vector<std::vector<LatticePoint>> shapes;
  enumerate_lattice_animals(4, [&](const std::vector<LatticePoint>& pts) {
    shapes.push_back(pts);
  });
  CHECK(shapes.size() == 7);
  for (const auto& pts : shapes) {
    REQUIRE(pts.size() == 4);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(canonicalize_isometry(Configuration::from_lattice(pts)).lattice_points() == pts);
  }
  std::sort(shapes.begin(), shapes.end());
  CHECK(std::adjacent_find(shapes.begin(), shapes.end()) == shapes.end());
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_lattice_animals(0, [](const auto&) {}), std::domain_error);
  CHECK_THROWS_AS(count_lattice_animals(kEnumerationCap + 1), capacity_error);
}

TEST_CASE("exhaustive lattice minima") {
  std::vector<double> want{0.0, -1.0, -3.0, -5.0, -7.0, -9.0, -12.0};
  for (int n = 1; n <= 7; ++n) {
    auto rep = lattice_minimum(n);
    CHECK(rep.n == n);
    CHECK(rep.method == "exhaustive");
    CHECK(rep.best_energy == want[static_cast<std::size_t>(n - 1)]);
    CHECK(rep.best_energy == static_cast<double>(canonical_energy(n)));
    CHECK(rep.states_visited == count_lattice_animals(n));
    REQUIRE_FALSE(rep.best_configurations.empty());
    for (const auto& c : rep.best_configurations) {
      CHECK(total_energy(c).value == doctest::Approx(rep.best_energy));
    }
    auto spiral = canonicalize_isometry(canonical_configuration(n)).lattice_points();
    bool found = false;
    for (const auto& c : rep.best_configurations) {
      found = found || c.lattice_points() == spiral;
    }
    CHECK(found);
  }
}

TEST_CASE("feasible sampler respects box and spacing") {
  auto c = random_feasible_configuration(40, 12.0, 1234);
  REQUIRE(c.size() == 40);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c.point(i).x >= 0.0);
    CHECK(c.point(i).x <= 12.0);
    CHECK(c.point(i).y >= 0.0);
    CHECK(c.point(i).y <= 12.0);
  }
  CHECK(min_pairwise_distance(c) >= 1.0);

  auto again = random_feasible_configuration(40, 12.0, 1234);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c.point(i).x == again.point(i).x);
    CHECK(c.point(i).y == again.point(i).y);
  }
  auto other = random_feasible_configuration(40, 12.0, 1235);
  bool same = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    same = same && c.point(i).x == other.point(i).x && c.point(i).y == other.point(i).y;
  }
  CHECK_FALSE(same);
}

TEST_CASE("sampler saturates in an overfull box") {
  CHECK_THROWS_AS(random_feasible_configuration(200, 10.0, 7), saturation_error);
}

TEST_CASE("basin hopping pulls a pair toward contact") {
  // The greedy descent stalls once the remaining slack is smaller than the
  // step can reliably improve, so only a coarse bound is stable.
  BasinHopParams p;
  p.box_side = 1.8;
  p.restarts = 8;
  auto rep = basin_hop(2, p, 99);
  CHECK(rep.method == "basin_hop");
  CHECK(rep.best_energy <= -0.5);
  CHECK(rep.best_energy >= -1.0 - 1e-9);
  REQUIRE_FALSE(rep.best_configurations.empty());
  CHECK(total_energy(rep.best_configurations.front()).value ==
        doctest::Approx(rep.best_energy).epsilon(1e-12));
}

TEST_CASE("basin hopping respects the spiral bound") {
  for (int n : {3, 5, 8}) {
    BasinHopParams p;
    p.box_side = n < 8 ? 2.5 : 3.5;
    p.restarts = 10;
    auto rep = basin_hop(n, p, static_cast<std::uint64_t>(1000 + n));
    CHECK(rep.best_energy >= static_cast<double>(canonical_energy(n)) - 1e-9);
    CHECK(rep.best_energy < 0.0);
    CHECK(total_energy(rep.best_configurations.front()).value ==
          doctest::Approx(rep.best_energy).epsilon(1e-12));
  }
}

TEST_CASE("basin hopping is thread invariant") {
  BasinHopParams one;
  one.box_side = 3.0;
  one.restarts = 12;
  one.threads = 1;
  BasinHopParams four = one;
  four.threads = 4;
  auto a = basin_hop(6, one, 42);
  auto b = basin_hop(6, four, 42);
  CHECK(a.best_energy == b.best_energy);
  REQUIRE_FALSE(a.best_configurations.empty());
  REQUIRE_FALSE(b.best_configurations.empty());
  const auto& pa = a.best_configurations.front();
  const auto& pb = b.best_configurations.front();
  REQUIRE(pa.size() == pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    CHECK(pa.point(i).x == pb.point(i).x);
    CHECK(pa.point(i).y == pb.point(i).y);
  }
}
