#include "softdisc/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <thread>
#include <unordered_set>

#include "softdisc/canonical.hpp"
#include "softdisc/energy.hpp"

namespace softdisc {

namespace {

constexpr std::array<LatticePoint, 6> kDirs{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

std::vector<LatticePoint> translation_normal_form(std::vector<LatticePoint> cells) {
  std::int64_t min_a = cells[0].a, min_b = cells[0].b;
  for (const auto& c : cells) {
    min_a = std::min(min_a, c.a);
    min_b = std::min(min_b, c.b);
  }
  for (auto& c : cells) {
    c.a -= min_a;
    c.b -= min_b;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<LatticePoint> isometry_canonical_form(const std::vector<LatticePoint>& cells) {
  std::vector<LatticePoint> best;
  for (int iso = 0; iso < 12; ++iso) {
    std::vector<LatticePoint> image;
    image.reserve(cells.size());
    for (const auto& c : cells) image.push_back(apply_isometry(iso, c));
    image = translation_normal_form(std::move(image));
    if (iso == 0 || image < best) best = std::move(image);
  }
  return best;
}

// Redelmeier enumeration of fixed animals rooted at their (b, a)-least cell,
// restricted to the closed upper half-plane. Free animals are obtained by
// emitting an animal only when it already is its own canonical form.
struct AnimalEnumerator {
  int target;
  const std::function<void(const std::vector<LatticePoint>&)>& visit;
  std::unordered_set<LatticePoint, LatticePointHash> seen;
  std::vector<LatticePoint> animal;

  static bool allowed(const LatticePoint& p) { return p.b > 0 || (p.b == 0 && p.a >= 0); }

  void run() {
    seen.insert({0, 0});
    step({{0, 0}});
  }

  void step(std::vector<LatticePoint> untried) {
    while (!untried.empty()) {
      LatticePoint c = untried.back();
      untried.pop_back();
      animal.push_back(c);
      if (static_cast<int>(animal.size()) == target) {
        emit();
      } else {
        std::vector<LatticePoint> added;
        for (const auto& d : kDirs) {
          LatticePoint q{c.a + d.a, c.b + d.b};
          if (allowed(q) && seen.insert(q).second) added.push_back(q);
        }
        std::vector<LatticePoint> next = untried;
        next.insert(next.end(), added.begin(), added.end());
        step(std::move(next));
        for (const auto& q : added) seen.erase(q);
      }
      animal.pop_back();
    }
  }

  void emit() {
    std::vector<LatticePoint> normal = translation_normal_form(animal);
    if (normal == isometry_canonical_form(normal)) visit(normal);
  }
};

}  // namespace

void enumerate_lattice_animals(
    int n, const std::function<void(const std::vector<LatticePoint>&)>& visit) {
  if (n < 1) throw std::domain_error("animal size must be positive");
  if (n > kEnumerationCap) {
    throw capacity_error("exhaustive enumeration capped at n = " +
                         std::to_string(kEnumerationCap));
  }
  AnimalEnumerator e{n, visit};
  e.run();
}

std::uint64_t count_lattice_animals(int n) {
  std::uint64_t count = 0;
  enumerate_lattice_animals(n, [&](const std::vector<LatticePoint>&) { ++count; });
  return count;
}

SearchReport lattice_minimum(int n) {
  SearchReport report;
  report.n = n;
  report.method = "exhaustive";
  std::int64_t best = 1;  // above any reachable energy
  enumerate_lattice_animals(n, [&](const std::vector<LatticePoint>& cells) {
    ++report.states_visited;
    std::unordered_set<LatticePoint, LatticePointHash> index(cells.begin(), cells.end());
    std::int64_t bonds = 0;
    for (const auto& c : cells) {
      for (const auto& d : kDirs) {
        if (index.count({c.a + d.a, c.b + d.b})) ++bonds;
      }
    }
    std::int64_t energy = -bonds / 2;
    if (energy < best) {
      best = energy;
      report.best_configurations.clear();
    }
    if (energy == best) {
      report.best_configurations.push_back(Configuration::from_lattice(cells));
    }
  });
  report.best_energy = static_cast<double>(best);
  return report;
}

namespace {

constexpr std::uint64_t kMaxConsecutiveRejections = 1000000;

std::vector<EuclidPoint> sample_points(int n, double box_side, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, box_side);
  std::vector<EuclidPoint> points;
  points.reserve(n);
  std::uint64_t rejects = 0;
  while (static_cast<int>(points.size()) < n) {
    EuclidPoint p{coord(rng), coord(rng)};
    bool ok = true;
    for (const auto& q : points) {
      if (dist(p, q) < 1.0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      points.push_back(p);
      rejects = 0;
    } else if (++rejects > kMaxConsecutiveRejections) {
      throw saturation_error("could not place point " + std::to_string(points.size() + 1) +
                             " of " + std::to_string(n) + " in a box of side " +
                             std::to_string(box_side));
    }
  }
  return points;
}

}  // namespace

Configuration random_feasible_configuration(int n, double box_side, std::uint64_t seed,
                                            double delta) {
  if (n < 1) throw std::domain_error("n must be positive");
  if (!(box_side > 0.0)) throw std::domain_error("box_side must be positive");
  validate(PotentialParams{delta});
  std::mt19937_64 rng(seed);
  return Configuration::from_euclid(sample_points(n, box_side, rng), delta);
}

namespace {

struct RestartResult {
  double energy = 0.0;
  std::vector<EuclidPoint> points;
  std::uint64_t proposals = 0;
};

RestartResult run_restart(int n, const BasinHopParams& p, double box_side, int moves,
                          std::uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  std::vector<EuclidPoint> x = sample_points(n, box_side, rng);

  const double delta = p.delta;
  const double reach = 1.0 + delta;
  auto pair_energy = [delta, reach](double d) {
    // Caller guarantees d >= 1.
    if (d > reach) return 0.0;
    if (delta == 0.0) return -1.0;
    return -1.0 + (std::min(d, reach) - 1.0) / delta;
  };

  double energy = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) energy += pair_energy(dist(x[i], x[j]));
  }

  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int stall_limit = 20 * n;
  int stall = 0;
  RestartResult out;
  for (int move = 0; move < moves && stall < stall_limit; ++move) {
    ++out.proposals;
    int i = pick(rng);
    double dx, dy;
    do {
      dx = unit(rng) * p.step;
      dy = unit(rng) * p.step;
    } while (dx * dx + dy * dy > p.step * p.step);
    EuclidPoint cand{x[i].x + dx, x[i].y + dy};
    double gain = 0.0;
    bool feasible = true;
    for (int j = 0; j < n && feasible; ++j) {
      if (j == i) continue;
      double d_new = dist(cand, x[j]);
      if (d_new < 1.0) {
        feasible = false;
        break;
      }
      gain += pair_energy(d_new) - pair_energy(dist(x[i], x[j]));
    }
    if (feasible && gain < -1e-12) {
      x[i] = cand;
      energy += gain;
      stall = 0;
    } else {
      ++stall;
    }
  }

  // Recompute from scratch so accumulated increments cannot drift.
  out.energy = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.energy += pair_energy(dist(x[i], x[j]));
  }
  out.points = std::move(x);
  return out;
}

}  // namespace

SearchReport basin_hop(int n, const BasinHopParams& p, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("n must be positive");
  validate(PotentialParams{p.delta});
  const double box_side = p.box_side > 0.0 ? p.box_side : std::max(4.0, 2.5 * std::sqrt(n));
  const int moves = p.moves_per_restart > 0 ? p.moves_per_restart : 150 * n;
  const int restarts = std::max(1, p.restarts);

  std::vector<RestartResult> results(restarts);
  auto worker = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      std::uint64_t restart_seed = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(r) + 1);
      results[r] = run_restart(n, p, box_side, moves, restart_seed);
    }
  };
  unsigned threads = std::max(1u, p.threads);
  if (threads == 1) {
    worker(0, restarts);
  } else {
    std::vector<std::thread> pool;
    int chunk = (restarts + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    for (unsigned t = 0; t < threads; ++t) {
      int begin = static_cast<int>(t) * chunk;
      int end = std::min(restarts, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  SearchReport report;
  report.n = n;
  report.method = "basin_hop";
  report.seed = seed;
  int best = 0;
  for (int r = 0; r < restarts; ++r) {
    report.states_visited += results[r].proposals;
    if (results[r].energy < results[best].energy) best = r;
  }
  report.best_energy = results[best].energy;
  report.best_configurations.push_back(
      Configuration::from_euclid(std::move(results[best].points), p.delta));

  if (report.best_energy < static_cast<double>(canonical_energy(n)) - 1e-9) {
    throw invariant_error("basin hop found energy " + std::to_string(report.best_energy) +
                          " below the spiral bound for n = " + std::to_string(n));
  }
  return report;
}

}  // namespace softdisc
