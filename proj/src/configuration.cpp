#include "softdisc/configuration.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace softdisc {

double delta_upper_bound() {
  return 1.0 / (2.0 * std::sin(std::numbers::pi / 7.0)) - 1.0;
}

void validate(const PotentialParams& params) {
  if (!(params.delta >= 0.0) || !(params.delta < delta_upper_bound())) {
    throw validation_error("delta must lie in [0, " + std::to_string(delta_upper_bound()) +
                           "), got " + std::to_string(params.delta));
  }
}

Configuration Configuration::from_lattice(std::vector<LatticePoint> points, double delta) {
  Configuration c;
  c.set_delta(delta);
  c.points_.reserve(points.size());
  c.lattice_.reserve(points.size());
  for (const auto& p : points) c.push_lattice(p);
  c.check_distinct();
  return c;
}

Configuration Configuration::from_euclid(std::vector<EuclidPoint> points, double delta) {
  Configuration c;
  c.set_delta(delta);
  c.points_.reserve(points.size());
  c.lattice_.reserve(points.size());
  for (const auto& p : points) c.push_euclid(p);
  c.check_distinct();
  return c;
}

void Configuration::push_lattice(const LatticePoint& p) {
  points_.push_back(lattice_to_euclid(p));
  lattice_.push_back(p);
}

void Configuration::push_euclid(const EuclidPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw validation_error("point coordinates must be finite");
  }
  points_.push_back(p);
  lattice_.push_back(std::nullopt);
}

bool Configuration::all_lattice() const {
  for (const auto& l : lattice_) {
    if (!l) return false;
  }
  return true;
}

std::vector<LatticePoint> Configuration::lattice_points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!is_lattice(i)) throw std::domain_error("configuration has non-lattice points");
    out.push_back(lattice(i));
  }
  return out;
}

void Configuration::set_delta(double delta) {
  PotentialParams p{delta};
  validate(p);
  delta_ = delta;
}

void Configuration::check_distinct() const {
  struct XYHash {
    std::size_t operator()(const EuclidPoint& p) const {
      std::uint64_t hx, hy;
      static_assert(sizeof(double) == sizeof(std::uint64_t));
      std::memcpy(&hx, &p.x, sizeof hx);
      std::memcpy(&hy, &p.y, sizeof hy);
      std::uint64_t h = hx * 0x9e3779b97f4a7c15ULL;
      h ^= hy + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_set<EuclidPoint, XYHash> seen;
  seen.reserve(points_.size() * 2);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!seen.insert(points_[i]).second) {
      throw validation_error("duplicate point at index " + std::to_string(i));
    }
  }
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Configuration parse_configuration(std::istream& in) {
  Configuration config;
  bool saw_delta = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "delta") {
      if (saw_delta) throw parse_error(lineno, "repeated delta header");
      if (!config.empty()) throw parse_error(lineno, "delta header must precede points");
      double value;
      std::string extra;
      if (!(ls >> value) || (ls >> extra)) throw parse_error(lineno, "expected: delta <value>");
      try {
        config.set_delta(value);
      } catch (const validation_error& e) {
        throw parse_error(lineno, e.what());
      }
      saw_delta = true;
    } else if (tag == "L") {
      std::int64_t a, b;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) throw parse_error(lineno, "expected: L <a> <b>");
      config.push_lattice({a, b});
    } else if (tag == "E") {
      double x, y;
      std::string extra;
      if (!(ls >> x >> y) || (ls >> extra)) throw parse_error(lineno, "expected: E <x> <y>");
      try {
        config.push_euclid({x, y});
      } catch (const validation_error& e) {
        throw parse_error(lineno, e.what());
      }
    } else {
      throw parse_error(lineno, "unknown line tag '" + tag + "'");
    }
  }
  config.check_distinct();
  return config;
}

Configuration parse_configuration(const std::string& text) {
  std::istringstream in(text);
  return parse_configuration(in);
}

void serialize_configuration(const Configuration& config, std::ostream& out) {
  if (config.delta() != kDefaultDelta) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", config.delta());
    out << "delta " << buf << "\n";
  }
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config.is_lattice(i)) {
      const auto& p = config.lattice(i);
      out << "L " << p.a << " " << p.b << "\n";
    } else {
      char buf[128];
      std::snprintf(buf, sizeof buf, "E %.17g %.17g", config.point(i).x, config.point(i).y);
      out << buf << "\n";
    }
  }
}

std::string serialize_configuration(const Configuration& config) {
  std::ostringstream out;
  serialize_configuration(config, out);
  return out.str();
}

double min_pairwise_distance(const Configuration& config) {
  if (config.size() < 2) throw std::domain_error("need at least two points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      double d;
      if (config.is_lattice(i) && config.is_lattice(j)) {
        d = std::sqrt(static_cast<double>(lattice_dist2(config.lattice(i), config.lattice(j))));
      } else {
        d = dist(config.point(i), config.point(j));
      }
      best = std::min(best, d);
    }
  }
  return best;
}

Configuration canonicalize_isometry(const Configuration& config) {
  std::vector<LatticePoint> base = config.lattice_points();
  std::vector<LatticePoint> best;
  for (int iso = 0; iso < 12; ++iso) {
    std::vector<LatticePoint> image;
    image.reserve(base.size());
    for (const auto& p : base) image.push_back(apply_isometry(iso, p));
    if (!image.empty()) {
      std::int64_t min_a = image[0].a, min_b = image[0].b;
      for (const auto& p : image) {
        min_a = std::min(min_a, p.a);
        min_b = std::min(min_b, p.b);
      }
      for (auto& p : image) {
        p.a -= min_a;
        p.b -= min_b;
      }
    }
    std::sort(image.begin(), image.end());
    if (iso == 0 || image < best) best = std::move(image);
  }
  return Configuration::from_lattice(std::move(best), config.delta());
}

}  // namespace softdisc
