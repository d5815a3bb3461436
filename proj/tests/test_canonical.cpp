#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "softdisc/canonical.hpp"
#include "softdisc/energy.hpp"

using namespace softdisc;

TEST_CASE("spiral addresses") {
  auto i1 = canonical_index(1);
  CHECK(i1.s == 0);
  CHECK(i1.k == 0);
  CHECK(i1.j == 0);

  auto i7 = canonical_index(7);
  CHECK(i7.s == 1);
  CHECK(i7.k == 0);
  CHECK(i7.j == 0);

  auto i10 = canonical_index(10);
  CHECK(i10.s == 1);
  CHECK(i10.k == 1);
  CHECK(i10.j == 1);

  auto i19 = canonical_index(19);
  CHECK(i19.s == 2);
  CHECK(i19.k == 0);
  CHECK(i19.j == 0);

  auto i20 = canonical_index(20);
  CHECK(i20.s == 2);
  CHECK(i20.k == 0);
  CHECK(i20.j == 1);

  for (std::int64_t n = 1; n <= 3000; ++n) {
    auto idx = canonical_index(n);
    CHECK(n == 3 * idx.s * idx.s + 3 * idx.s + 1 + idx.k * (idx.s + 1) + idx.j);
    CHECK(idx.k >= 0);
    CHECK(idx.k <= 5);
    CHECK(idx.j >= 0);
    CHECK(idx.j <= idx.s);
  }
}

TEST_CASE("hexagon points are the hexnorm ball") {
  for (std::int64_t s = 0; s <= 5; ++s) {
    auto pts = hexagon_points(s);
    CHECK(static_cast<std::int64_t>(pts.size()) == 3 * s * s + 3 * s + 1);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& p : pts) CHECK(hexnorm(p) <= s);
  }
}

TEST_CASE("spirals are nested") {
  auto prev = canonical_configuration(1).lattice_points();
  std::set<LatticePoint> seen(prev.begin(), prev.end());
  for (std::int64_t n = 2; n <= 120; ++n) {
    auto pts = canonical_configuration(n).lattice_points();
    REQUIRE(pts.size() == static_cast<std::size_t>(n));
    std::set<LatticePoint> now(pts.begin(), pts.end());
    CHECK(now.size() == static_cast<std::size_t>(n));
    for (const auto& p : seen) CHECK(now.count(p) == 1);
    seen = std::move(now);
  }
}

TEST_CASE("boundary counts") {
  CHECK(canonical_boundary_count(1) == 0);
  CHECK(canonical_boundary_count(2) == 2);
  CHECK(canonical_boundary_count(3) == 3);
  CHECK(canonical_boundary_count(4) == 4);
  CHECK(canonical_boundary_count(7) == 6);
  CHECK(canonical_boundary_count(8) == 7);
  CHECK(canonical_boundary_count(9) == 8);
  CHECK(canonical_boundary_count(10) == 8);
  CHECK(canonical_boundary_count(12) == 9);
  CHECK(canonical_boundary_count(13) == 10);
  CHECK(canonical_boundary_count(19) == 12);
  CHECK(canonical_boundary_count(20) == 13);
  CHECK(canonical_boundary_count(37) == 18);
}

TEST_CASE("boundary count matches the geometry") {
  for (std::int64_t n : {1, 2, 3, 4, 7, 9, 12, 19, 24, 37, 44, 61, 91}) {
    auto b = decompose(canonical_configuration(n));
    CHECK(b.boundary_count == canonical_boundary_count(n));
  }
}

TEST_CASE("spiral energy closed forms agree") {
  CHECK(canonical_energy(1) == 0);
  CHECK(canonical_energy(2) == -1);
  CHECK(canonical_energy(3) == -3);
  CHECK(canonical_energy(7) == -12);
  CHECK(canonical_energy(19) == -42);
  for (std::int64_t n = 1; n <= 1000; ++n) {
    CHECK(canonical_energy(n) == harborth_energy(n));
  }
}

TEST_CASE("spiral energy matches the measured energy") {
  for (std::int64_t n = 1; n <= 80; ++n) {
    CHECK(total_energy(canonical_configuration(n)).value ==
          doctest::Approx(static_cast<double>(canonical_energy(n))).epsilon(1e-12));
  }
}

TEST_CASE("shell growth inequalities") {
  CHECK_THROWS_AS(boundary_growth_check(1), std::domain_error);

  auto c8 = boundary_growth_check(8);
  CHECK(c8.removal_holds);
  CHECK(c8.removal_gap == 7);

  auto c9 = boundary_growth_check(9);
  CHECK_FALSE(c9.removal_holds);
  CHECK(c9.removal_gap == 8);
  CHECK(c9.addition_holds);

  auto c19 = boundary_growth_check(19);
  CHECK(c19.removal_holds);
  CHECK(c19.removal_gap == 6);

  for (std::int64_t n = 2; n <= 400; ++n) {
    auto c = boundary_growth_check(n);
    CHECK(c.addition_holds);
    CHECK(c.removal_holds == (n != 9));
  }
}
