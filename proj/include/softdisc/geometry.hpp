#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>

namespace softdisc {

inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kHalfSqrt3 = 0.8660254037844386468;

// Point of the unit triangular lattice in basis coordinates: (a, b) stands for
// a*(1,0) + b*(1/2, sqrt(3)/2).
struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct EuclidPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const EuclidPoint&, const EuclidPoint&) = default;
};

inline EuclidPoint lattice_to_euclid(const LatticePoint& p) {
  return {static_cast<double>(p.a) + 0.5 * static_cast<double>(p.b),
          kHalfSqrt3 * static_cast<double>(p.b)};
}

// Squared Euclidean norm of a lattice vector; exact in integers.
inline std::int64_t lattice_norm2(const LatticePoint& p) {
  return p.a * p.a + p.a * p.b + p.b * p.b;
}

inline std::int64_t lattice_dist2(const LatticePoint& p, const LatticePoint& q) {
  return lattice_norm2({p.a - q.a, p.b - q.b});
}

// Hexagonal norm: distance to the origin in lattice steps.
inline std::int64_t hexnorm(const LatticePoint& p) {
  std::int64_t s = p.a + p.b;
  std::int64_t m = std::abs(p.a);
  if (std::abs(p.b) > m) m = std::abs(p.b);
  if (std::abs(s) > m) m = std::abs(s);
  return m;
}

// Rotation by 60 degrees counterclockwise about the origin.
inline LatticePoint rotate60(const LatticePoint& p) { return {-p.b, p.a + p.b}; }

// Reflection across the x-axis.
inline LatticePoint reflect_x(const LatticePoint& p) { return {p.a + p.b, -p.b}; }

// The 12 isometries of the lattice fixing the origin, as index 0..11:
// k rotations by 60 degrees (k = 0..5), optionally preceded by reflect_x.
inline LatticePoint apply_isometry(int index, LatticePoint p) {
  if (index >= 6) p = reflect_x(p);
  for (int k = index % 6; k > 0; --k) p = rotate60(p);
  return p;
}

inline double dist(const EuclidPoint& p, const EuclidPoint& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

inline std::int64_t cross(const LatticePoint& u, const LatticePoint& v) {
  // Proportional to the Euclidean cross product of the embedded vectors
  // (scale factor sqrt(3)/2 > 0), so the sign is the orientation.
  return u.a * v.b - u.b * v.a;
}

inline double cross(const EuclidPoint& u, const EuclidPoint& v) { return u.x * v.y - u.y * v.x; }

// Doubled integer coordinates (2x, 2y/sqrt(3)) = (2a+b, b): an exact planar
// embedding of the lattice up to a positive diagonal scaling, used by the
// integer orientation and point-in-polygon routines.
struct DoubledPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

inline DoubledPoint doubled(const LatticePoint& p) { return {2 * p.a + p.b, p.b}; }

inline std::int64_t orient(const DoubledPoint& a, const DoubledPoint& b, const DoubledPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline double orient(const EuclidPoint& a, const EuclidPoint& b, const EuclidPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const {
    std::uint64_t h = static_cast<std::uint64_t>(p.a) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(p.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Strict angular order of nonzero direction vectors, counterclockwise starting
// at the positive x-axis. Exact for lattice directions.
inline bool angular_less(const LatticePoint& u, const LatticePoint& v) {
  auto half = [](const LatticePoint& w) { return (w.b > 0 || (w.b == 0 && w.a > 0)) ? 0 : 1; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

inline bool angular_less(const EuclidPoint& u, const EuclidPoint& v) {
  auto half = [](const EuclidPoint& w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

}  // namespace softdisc
