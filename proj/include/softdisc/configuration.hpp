#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "softdisc/errors.hpp"
#include "softdisc/geometry.hpp"

namespace softdisc {

inline constexpr double kDefaultDelta = 1.0 / 24.0;

// Largest admissible interaction range: 1/(2 sin(pi/7)) - 1. For delta below
// this bound, seven mutually bonded neighbours around a vertex are impossible.
double delta_upper_bound();

struct PotentialParams {
  double delta = kDefaultDelta;
  // Measurement slack: pairs closer than 1 - hard_tol are infeasible, pairs up
  // to 1 + delta + bond_tol still count as bonded. Distances are clamped back
  // into [1, 1 + delta] before any energy is evaluated.
  double hard_tol = 1e-9;
  double bond_tol = 1e-9;
};

// Throws validation_error unless 0 <= delta < delta_upper_bound().
void validate(const PotentialParams& params);

// A finite point configuration. Each site is either a triangular-lattice point
// (kept in exact integer coordinates) or a general planar point. The file
// format's delta header travels with the configuration.
class Configuration {
 public:
  Configuration() = default;

  static Configuration from_lattice(std::vector<LatticePoint> points,
                                    double delta = kDefaultDelta);
  static Configuration from_euclid(std::vector<EuclidPoint> points, double delta = kDefaultDelta);

  void push_lattice(const LatticePoint& p);
  void push_euclid(const EuclidPoint& p);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const EuclidPoint& point(std::size_t i) const { return points_[i]; }
  const std::vector<EuclidPoint>& points() const { return points_; }

  bool is_lattice(std::size_t i) const { return lattice_[i].has_value(); }
  const LatticePoint& lattice(std::size_t i) const { return *lattice_[i]; }
  bool all_lattice() const;
  std::vector<LatticePoint> lattice_points() const;  // requires all_lattice()

  double delta() const { return delta_; }
  void set_delta(double delta);

  PotentialParams params() const { return PotentialParams{delta_}; }

  // Throws validation_error if any two sites coincide exactly.
  void check_distinct() const;

 private:
  std::vector<EuclidPoint> points_;
  std::vector<std::optional<LatticePoint>> lattice_;
  double delta_ = kDefaultDelta;
};

// Text format, one item per line:
//   # comment
//   delta <value>        (optional, at most once)
//   L <a> <b>            (lattice point, integers)
//   E <x> <y>            (planar point, reals)
// Malformed lines raise parse_error with the 1-based line number; duplicate
// points and out-of-range delta raise validation_error.
Configuration parse_configuration(std::istream& in);
Configuration parse_configuration(const std::string& text);

// Inverse of parse_configuration: lattice points stay exact, planar points are
// printed with %.17g so they round-trip bit for bit. The delta header is
// emitted only when delta differs from the default.
std::string serialize_configuration(const Configuration& config);
void serialize_configuration(const Configuration& config, std::ostream& out);

// Smallest pairwise distance. Throws std::domain_error for fewer than 2 points.
double min_pairwise_distance(const Configuration& config);

// Canonical representative of a lattice configuration under translations and
// the 12-element point group: the lexicographically smallest translated sorted
// point list over all 12 images. Idempotent. Requires all_lattice().
Configuration canonicalize_isometry(const Configuration& config);

}  // namespace softdisc
