#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "softdisc/bond_graph.hpp"
#include "softdisc/canonical.hpp"
#include "softdisc/configuration.hpp"
#include "softdisc/energy.hpp"

using namespace softdisc;

TEST_CASE("potential ramp") {
  PotentialParams p{};
  double delta = p.delta;
  CHECK_FALSE(potential_value(0.5, p).finite);
  CHECK_FALSE(potential_value(1.0 - 1e-6, p).finite);
  CHECK(potential_value(1.0 - 0.5e-9, p).value == doctest::Approx(-1.0));
  CHECK(potential_value(1.0, p).value == doctest::Approx(-1.0));
  CHECK(potential_value(1.0 + delta / 2.0, p).value == doctest::Approx(-0.5));
  CHECK(potential_value(1.0 + delta, p).value == doctest::Approx(0.0));
  CHECK(potential_value(1.0 + delta + 1e-6, p).value == 0.0);
  CHECK(potential_value(5.0, p).value == 0.0);
}

TEST_CASE("sticky potential is a contact indicator") {
  PotentialParams p{0.0};
  CHECK_FALSE(potential_value(0.9, p).finite);
  CHECK(potential_value(1.0, p).value == -1.0);
  CHECK(potential_value(1.0 + 0.5e-9, p).value == -1.0);
  CHECK(potential_value(1.001, p).value == 0.0);
}

TEST_CASE("total energy counts lattice contacts exactly") {
  CHECK(total_energy(canonical_configuration(7)).value == -12.0);
  CHECK(total_energy(canonical_configuration(2)).value == -1.0);
  CHECK(total_energy(canonical_configuration(19)).value == -42.0);
}

TEST_CASE("overlap makes the energy infinite") {
  auto c = Configuration::from_euclid({{0.0, 0.0}, {0.5, 0.0}});
  CHECK_FALSE(total_energy(c).finite);
  CHECK_THROWS_AS(decompose(c), infeasible_error);
}

TEST_CASE("a fully stretched bond stores one unit of elastic energy") {
  double delta = kDefaultDelta;
  auto c = Configuration::from_euclid({{0.0, 0.0}, {1.0 + delta, 0.0}});
  auto g = build_bond_graph(c);
  CHECK(elastic_energy(g) == doctest::Approx(1.0).epsilon(1e-12));
  auto b = decompose(c);
  CHECK(b.total == doctest::Approx(0.0));
  CHECK(b.per_gr == 2);
  CHECK(b.euler_characteristic == 1);
  CHECK(b.elastic == doctest::Approx(1.0));
  CHECK(std::abs(b.residual) <= 1e-12);
}

TEST_CASE("decomposition of hexagonal spirals") {
  for (int n : {1, 2, 3, 4, 7, 12, 19, 37, 44, 61}) {
    auto b = decompose(canonical_configuration(n));
    CHECK(b.n == n);
    CHECK(b.total == doctest::Approx(static_cast<double>(canonical_energy(n))).epsilon(1e-12));
    CHECK(std::abs(b.residual) <= 1e-9);
    CHECK(b.defect == 0);
    CHECK(b.elastic <= 1e-9);
    CHECK(b.component_count == 1);
    if (n >= 3) {
      CHECK(b.excess == doctest::Approx(static_cast<double>(b.per_gr) + 3.0).epsilon(1e-9));
      CHECK(b.wire_count == 0);
      CHECK(b.simple_closed_boundary);
    }
  }
}

TEST_CASE("pendant wire energy identity") {
  const double R = 1.0 / (2.0 * std::sin(std::numbers::pi / 8.0));
  std::vector<EuclidPoint> pts;
  for (int i = 0; i < 8; ++i) {
    double t = 2.0 * std::numbers::pi * i / 8.0;
    pts.push_back({R * std::cos(t), R * std::sin(t)});
  }
  pts.push_back({R - 1.0, 0.0});
  auto b = decompose(Configuration::from_euclid(pts));
  CHECK(b.bond_count == 9);
  CHECK(b.total == doctest::Approx(-9.0).epsilon(1e-12));
  CHECK(b.per_gr == 8);
  CHECK(b.defect == 7);
  CHECK(b.euler_characteristic == 1);
  CHECK(b.wire_count == 1);
  CHECK(b.face_count == 1);
  CHECK(b.boundary_count == 8);
  CHECK(b.elastic <= 1e-12);
  CHECK(std::abs(b.residual) <= 1e-9);
  CHECK_FALSE(b.simple_closed_boundary);
}

TEST_CASE("uniform dilation converts binding into elastic energy") {
  auto base = canonical_configuration(19);
  double scale = 1.0 + kDefaultDelta / 3.0;
  std::vector<EuclidPoint> pts;
  for (std::size_t i = 0; i < base.size(); ++i) {
    pts.push_back({base.point(i).x * scale, base.point(i).y * scale});
  }
  auto b = decompose(Configuration::from_euclid(pts));
  CHECK(b.bond_count == 42);
  CHECK(b.elastic == doctest::Approx(14.0).epsilon(1e-9));
  CHECK(b.total == doctest::Approx(-28.0).epsilon(1e-9));
  CHECK(b.per_gr == 12);
  CHECK(b.defect == 0);
  CHECK(std::abs(b.residual) <= 1e-9);
}

TEST_CASE("identity holds with a component nested inside a ring") {
  std::vector<LatticePoint> pts;
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = -3; b <= 3; ++b) {
      if (hexnorm({a, b}) == 3) pts.push_back({a, b});
    }
  }
  pts.push_back({0, 0});
  pts.push_back({1, 0});
  auto b = decompose(Configuration::from_lattice(pts));
  CHECK(b.total == doctest::Approx(-19.0));
  CHECK(b.per_gr == 38);
  CHECK(b.euler_characteristic == 1);
  CHECK(b.wire_count == 19);
  CHECK(b.component_count == 2);
  CHECK(b.nesting_depth == 1);
  CHECK(std::abs(b.residual) <= 1e-9);
}

TEST_CASE("sticky decomposition of a spiral") {
  auto b = decompose(canonical_configuration(19, 0.0));
  CHECK(b.total == -42.0);
  CHECK(b.elastic == 0.0);
  CHECK(std::abs(b.residual) <= 1e-12);
  CHECK(b.per_gr == 12);
}
