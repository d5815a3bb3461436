#include "softdisc/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "softdisc/energy.hpp"
#include "softdisc/faces.hpp"

namespace softdisc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_delta(double delta) {
  if (!(delta > 0.0) || !(delta < delta_upper_bound())) {
    throw std::domain_error("delta must lie in (0, " + std::to_string(delta_upper_bound()) +
                            ")");
  }
}

}  // namespace

double zmax(double delta) {
  require_positive_delta(delta);
  return 1.0 - (6.0 / kPi) * std::asin(1.0 / (2.0 * (1.0 + delta)));
}

double g_function(double z, double delta) {
  require_positive_delta(delta);
  double top = zmax(delta);
  if (!(z >= 0.0) || z > top + 1e-12) {
    throw std::domain_error("z must lie in [0, zmax(delta)]");
  }
  return -1.0 / (2.0 * delta) + 1.0 / (4.0 * delta * std::sin((1.0 - z) * kPi / 6.0)) - z;
}

double min_long_bond_length(double z) {
  if (!(z >= 0.0) || !(z < 1.0)) throw std::domain_error("z must lie in [0, 1)");
  return 1.0 / (2.0 * std::sin((1.0 - z) * kPi / 6.0));
}

double gap_support(double alpha_bar, double alpha_j) {
  if (!(alpha_j > 0.0) || !(alpha_j < kPi / 2.0) || !(alpha_bar >= 0.0) ||
      !(alpha_bar <= alpha_j)) {
    throw std::domain_error("need 0 <= alpha_bar <= alpha_j < pi/2");
  }
  return std::sin(alpha_bar) + std::cos(alpha_bar) * std::tan(alpha_j - alpha_bar);
}

double vertex_inequality_margin(const Fan& fan, const PotentialParams& params) {
  validate(params);
  const std::size_t m = fan.lengths.size();
  if (m < 2 || fan.angles.size() != m) {
    throw std::domain_error("fan needs >= 2 spokes with one angle per length");
  }
  for (double l : fan.lengths) {
    if (!(l >= 1.0 - 1e-12) || !(l <= 1.0 + params.delta + 1e-12)) {
      throw std::domain_error("spoke length outside [1, 1+delta]");
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(fan.angles[i] > fan.angles[i - 1])) {
      throw std::domain_error("angles must be strictly increasing");
    }
  }
  double span = fan.angles.back() - fan.angles.front();
  if (!(span <= 2.0 * kPi)) throw std::domain_error("fan spans more than a full turn");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double li = fan.lengths[i], lj = fan.lengths[j];
      double d2 = li * li + lj * lj - 2.0 * li * lj * std::cos(fan.angles[j] - fan.angles[i]);
      if (d2 < (1.0 - params.hard_tol) * (1.0 - params.hard_tol)) {
        throw std::domain_error("infeasible fan: spoke tips closer than 1");
      }
    }
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    ExtReal v = potential_value(std::clamp(fan.lengths[i], 1.0, 1.0 + params.delta), params);
    double weight = (i == 0 || i + 1 == m) ? 0.5 : 1.0;
    sum += weight * v.value;
  }
  return sum + 3.0 * span / kPi;
}

Fan sample_feasible_fan(std::mt19937_64& rng, const PotentialParams& params) {
  validate(params);
  const double delta = params.delta;
  // Chord bounds: with unit lengths a pair of spokes is feasible iff their
  // angular gap is >= pi/3; with lengths 1 + delta the threshold shrinks to
  // gap_lo. Chords grow with the lengths, so gaps below gap_lo are infeasible
  // for every length draw and gaps of pi/3 or more for none.
  const double gap_hi = kPi / 3.0;
  double c = 1.0 - 1.0 / (2.0 * (1.0 + delta) * (1.0 + delta));
  const double gap_lo = std::acos(std::clamp(c, -1.0, 1.0));
  const double feas2 = (1.0 - params.hard_tol) * (1.0 - params.hard_tol);

  std::uniform_int_distribution<int> count_dist(2, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> length_dist(1.0, 1.0 + delta);

  const int m = count_dist(rng);
  const double slack = std::max(0.0, 2.0 * kPi - m * gap_lo);

  const int max_attempts = 100000;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Directions are sorted uniforms conditioned on all m circular gaps (the
    // m-1 consecutive ones plus the wrap-around) being >= gap_lo. Under that
    // conditioning the gap vector is gap_lo plus a uniform (Dirichlet) split
    // of the slack, the wrap gap is the one straddling direction 0 and is
    // chosen size-biased, and 0 sits uniformly inside it.
    double expo[6], gaps[6], total = 0.0;
    for (int i = 0; i < m; ++i) {
      expo[i] = -std::log(1.0 - unit(rng));
      total += expo[i];
    }
    if (!(total > 0.0)) continue;
    for (int i = 0; i < m; ++i) gaps[i] = gap_lo + slack * expo[i] / total;

    double pick = unit(rng) * 2.0 * kPi;
    int wrap = 0;
    double acc = gaps[0];
    while (wrap + 1 < m && pick >= acc) {
      ++wrap;
      acc += gaps[wrap];
    }

    Fan fan;
    fan.angles.resize(m);
    fan.lengths.resize(m);
    fan.angles[0] = unit(rng) * gaps[wrap];
    for (int i = 1; i < m; ++i) fan.angles[i] = fan.angles[i - 1] + gaps[(wrap + i) % m];
    for (int i = 0; i < m; ++i) fan.lengths[i] = length_dist(rng);

    bool surely = true;
    for (int i = 0; i < m; ++i) surely = surely && gaps[i] >= gap_hi;
    if (!surely) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        for (int j = i + 1; j < m && ok; ++j) {
          double li = fan.lengths[i], lj = fan.lengths[j];
          double d2 = li * li + lj * lj - 2.0 * li * lj * std::cos(fan.angles[j] - fan.angles[i]);
          if (d2 < feas2) ok = false;
        }
      }
      if (!ok) continue;
    }
    return fan;
  }
  throw saturation_error("fan sampler exhausted its attempt budget");
}

FanSurveyResult fan_survey(std::uint64_t count, const PotentialParams& params,
                           std::uint64_t seed) {
  validate(params);
  FanSurveyResult out;
  out.min_margin = std::numeric_limits<double>::infinity();

  auto hexlike = [](const Fan& fan) {
    for (double l : fan.lengths) {
      if (std::abs(l - 1.0) > 1e-6) return false;
    }
    for (std::size_t i = 1; i < fan.angles.size(); ++i) {
      if (std::abs(fan.angles[i] - fan.angles[i - 1] - kPi / 3.0) > 1e-6) return false;
    }
    return true;
  };
  auto record = [&](const Fan& fan) {
    double margin = vertex_inequality_margin(fan, params);
    ++out.fans_checked;
    if (margin < out.min_margin) {
      out.min_margin = margin;
      out.min_margin_fan = fan;
    }
    if (std::abs(margin) <= 1e-9) {
      ++out.near_equality_count;
      if (!hexlike(fan)) out.near_equality_all_hexlike = false;
    }
  };

  for (int m = 2; m <= 6; ++m) {
    Fan hex;
    for (int i = 0; i < m; ++i) {
      hex.lengths.push_back(1.0);
      hex.angles.push_back(i * kPi / 3.0);
    }
    record(hex);
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) record(sample_feasible_fan(rng, params));
  return out;
}

ShellingCheck shelling_check(const Configuration& config, const PotentialParams& params) {
  validate(params);
  BondGraph graph = build_bond_graph(config, params);
  FaceDecomposition d = classify_faces(graph);
  if (d.component_count != 1) throw precondition_error("configuration must be connected");
  if (!has_simple_closed_boundary(graph, d)) {
    throw precondition_error("boundary must be a single simple cycle");
  }
  if (d.boundary_vertices.size() == config.size()) {
    throw precondition_error("interior must be nonempty");
  }

  Configuration peeled;
  peeled.set_delta(config.delta());
  std::vector<char> drop(config.size(), 0);
  for (int v : d.boundary_vertices) drop[v] = 1;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (drop[i]) continue;
    if (config.is_lattice(i)) {
      peeled.push_lattice(config.lattice(i));
    } else {
      peeled.push_euclid(config.point(i));
    }
  }

  EnergyBreakdown full = decompose(config, params);
  EnergyBreakdown inner = decompose(peeled, params);
  ShellingCheck out;
  out.lhs = full.excess;
  out.rhs = inner.excess + 6.0;
  out.holds = out.lhs >= out.rhs - 1e-9;
  if (std::abs(out.lhs - out.rhs) <= 1e-9 && full.defect != inner.defect) {
    throw invariant_error("excess ties but defects differ: " + std::to_string(full.defect) +
                          " vs " + std::to_string(inner.defect));
  }
  return out;
}

}  // namespace softdisc
