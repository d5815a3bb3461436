#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <sstream>

#include "softdisc/canonical.hpp"
#include "softdisc/energy.hpp"
#include "softdisc/lemmas.hpp"
#include "softdisc/render.hpp"
#include "softdisc/search.hpp"
#include "softdisc/verify.hpp"

namespace py = pybind11;
using namespace softdisc;

namespace {

std::vector<LatticePoint> to_lattice(const std::vector<std::pair<std::int64_t, std::int64_t>>& v) {
  std::vector<LatticePoint> out;
  out.reserve(v.size());
  for (const auto& [a, b] : v) out.push_back({a, b});
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> from_lattice(
    const std::vector<LatticePoint>& v) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(v.size());
  for (const auto& p : v) out.emplace_back(p.a, p.b);
  return out;
}

py::dict breakdown_dict(const EnergyBreakdown& b) {
  py::dict d;
  d["n"] = b.n;
  d["total"] = b.total;
  d["bond_count"] = b.bond_count;
  d["per_gr"] = b.per_gr;
  d["defect"] = b.defect;
  d["euler_characteristic"] = b.euler_characteristic;
  d["elastic"] = b.elastic;
  d["excess"] = b.excess;
  d["residual"] = b.residual;
  d["face_count"] = b.face_count;
  d["wire_count"] = b.wire_count;
  d["boundary_count"] = b.boundary_count;
  d["component_count"] = b.component_count;
  d["nesting_depth"] = b.nesting_depth;
  d["simple_closed_boundary"] = b.simple_closed_boundary;
  return d;
}

py::dict report_dict(const SearchReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["best_energy"] = r.best_energy;
  d["states_visited"] = r.states_visited;
  d["method"] = r.method;
  d["seed"] = r.seed;
  py::list configs;
  for (const auto& cfg : r.best_configurations) configs.append(cfg);
  d["best_configurations"] = configs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Energy decomposition and minimality certification for soft-disc crystals";

  py::register_exception<infeasible_error>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<saturation_error>(m, "SaturationError", PyExc_RuntimeError);
  py::register_exception<capacity_error>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<invariant_error>(m, "InvariantError", PyExc_AssertionError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);

  m.attr("DEFAULT_DELTA") = kDefaultDelta;
  m.def("delta_upper_bound", &delta_upper_bound);

  py::class_<Configuration>(m, "Configuration")
      .def_static(
          "from_lattice",
          [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts, double delta) {
            return Configuration::from_lattice(to_lattice(pts), delta);
          },
          py::arg("points"), py::arg("delta") = kDefaultDelta)
      .def_static(
          "from_euclid",
          [](const std::vector<std::pair<double, double>>& pts, double delta) {
            std::vector<EuclidPoint> v;
            v.reserve(pts.size());
            for (const auto& [x, y] : pts) v.push_back({x, y});
            return Configuration::from_euclid(std::move(v), delta);
          },
          py::arg("points"), py::arg("delta") = kDefaultDelta)
      .def_static("from_text",
                  [](const std::string& text) { return parse_configuration(text); })
      .def("to_text", [](const Configuration& c) { return serialize_configuration(c); })
      .def("__len__", &Configuration::size)
      .def("points",
           [](const Configuration& c) {
             std::vector<std::pair<double, double>> out;
             out.reserve(c.size());
             for (const auto& p : c.points()) out.emplace_back(p.x, p.y);
             return out;
           })
      .def("all_lattice", &Configuration::all_lattice)
      .def("lattice_points",
           [](const Configuration& c) { return from_lattice(c.lattice_points()); })
      .def_property("delta", &Configuration::delta, &Configuration::set_delta)
      .def("__repr__", [](const Configuration& c) {
        std::ostringstream s;
        s << "Configuration(" << c.size() << " points, delta=" << c.delta() << ")";
        return s.str();
      });

  m.def("canonical_index", [](std::int64_t n) {
    auto [s, k, j] = canonical_index(n);
    return py::make_tuple(s, k, j);
  });
  m.def("hexagon_points",
        [](std::int64_t s) { return from_lattice(hexagon_points(s)); });
  m.def("canonical_configuration", &canonical_configuration, py::arg("n"),
        py::arg("delta") = kDefaultDelta);
  m.def("canonical_boundary_count", &canonical_boundary_count);
  m.def("canonical_energy", &canonical_energy);
  m.def("harborth_energy", &harborth_energy);
  m.def("boundary_growth_check", [](std::int64_t n) {
    BoundaryGrowthCheck c = boundary_growth_check(n);
    py::dict d;
    d["removal_holds"] = c.removal_holds;
    d["addition_holds"] = c.addition_holds;
    d["removal_gap"] = c.removal_gap;
    return d;
  });

  m.def(
      "total_energy",
      [](const Configuration& c, std::optional<double> delta) {
        PotentialParams params{delta.value_or(c.delta())};
        ExtReal e = total_energy(c, params);
        return e.finite ? e.value : std::numeric_limits<double>::infinity();
      },
      py::arg("config"), py::arg("delta") = py::none());
  m.def(
      "decompose",
      [](const Configuration& c, std::optional<double> delta) {
        PotentialParams params{delta.value_or(c.delta())};
        return breakdown_dict(decompose(c, params));
      },
      py::arg("config"), py::arg("delta") = py::none());
  m.def("min_pairwise_distance", &min_pairwise_distance);
  m.def("canonicalize_isometry", &canonicalize_isometry);

  m.def("count_lattice_animals", &count_lattice_animals);
  m.def("lattice_minimum", [](int n) { return report_dict(lattice_minimum(n)); });
  m.def("random_feasible_configuration", &random_feasible_configuration, py::arg("n"),
        py::arg("box_side"), py::arg("seed"), py::arg("delta") = kDefaultDelta);
  m.def(
      "basin_hop",
      [](int n, std::uint64_t seed, int restarts, double delta, double box_side,
         unsigned threads) {
        BasinHopParams p;
        p.delta = delta;
        p.box_side = box_side;
        p.restarts = restarts;
        p.threads = threads;
        return report_dict(basin_hop(n, p, seed));
      },
      py::arg("n"), py::arg("seed") = 1, py::arg("restarts") = 50,
      py::arg("delta") = kDefaultDelta, py::arg("box_side") = 0.0, py::arg("threads") = 1);

  m.def("zmax", &zmax);
  m.def("g_function", &g_function, py::arg("z"), py::arg("delta"));
  m.def("min_long_bond_length", &min_long_bond_length);
  m.def("gap_support", &gap_support, py::arg("alpha_bar"), py::arg("alpha_j"));
  m.def(
      "vertex_inequality_margin",
      [](const std::vector<double>& lengths, const std::vector<double>& angles, double delta) {
        Fan fan{lengths, angles};
        return vertex_inequality_margin(fan, PotentialParams{delta});
      },
      py::arg("lengths"), py::arg("angles"), py::arg("delta") = kDefaultDelta);
  m.def(
      "fan_survey",
      [](std::uint64_t count, double delta, std::uint64_t seed) {
        FanSurveyResult s = fan_survey(count, PotentialParams{delta}, seed);
        py::dict d;
        d["fans_checked"] = s.fans_checked;
        d["min_margin"] = s.min_margin;
        d["near_equality_count"] = s.near_equality_count;
        d["near_equality_all_hexlike"] = s.near_equality_all_hexlike;
        return d;
      },
      py::arg("count"), py::arg("delta") = kDefaultDelta, py::arg("seed") = 1);
  m.def(
      "shelling_check",
      [](const Configuration& c, std::optional<double> delta) {
        ShellingCheck s = shelling_check(c, PotentialParams{delta.value_or(c.delta())});
        py::dict d;
        d["lhs"] = s.lhs;
        d["rhs"] = s.rhs;
        d["holds"] = s.holds;
        return d;
      },
      py::arg("config"), py::arg("delta") = py::none());

  m.def(
      "render_svg",
      [](const Configuration& c, std::optional<double> delta) {
        return render_svg(c, PotentialParams{delta.value_or(c.delta())});
      },
      py::arg("config"), py::arg("delta") = py::none());

  m.def(
      "run_acceptance",
      [](int max_n, unsigned threads) {
        VerifyOptions options{max_n, threads};
        py::list out;
        for (const auto& r : run_acceptance(options)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("max_n") = 0, py::arg("threads") = 0);
}
