#include "softdisc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "softdisc/canonical.hpp"
#include "softdisc/energy.hpp"
#include "softdisc/errors.hpp"
#include "softdisc/lemmas.hpp"
#include "softdisc/render.hpp"
#include "softdisc/search.hpp"
#include "softdisc/verify.hpp"

namespace softdisc::cli {

namespace {

using nlohmann::json;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Configuration load_configuration(const std::string& path, std::istream& in,
                                 std::optional<double> delta_override) {
  Configuration config;
  if (path == "-") {
    config = parse_configuration(in);
  } else {
    std::ifstream file(path);
    if (!file) throw io_error("cannot read " + path);
    config = parse_configuration(file);
  }
  if (delta_override) config.set_delta(*delta_override);
  return config;
}

void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot write " + path);
  file << text;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json breakdown_to_json(const EnergyBreakdown& b) {
  json j;
  j["n"] = b.n;
  j["total"] = b.total;
  j["bond_count"] = b.bond_count;
  j["per_gr"] = b.per_gr;
  j["defect"] = b.defect;
  j["euler_characteristic"] = b.euler_characteristic;
  j["elastic"] = b.elastic;
  j["excess"] = b.excess;
  j["residual"] = b.residual;
  j["face_count"] = b.face_count;
  j["wire_count"] = b.wire_count;
  j["boundary_count"] = b.boundary_count;
  j["component_count"] = b.component_count;
  j["nesting_depth"] = b.nesting_depth;
  j["simple_closed_boundary"] = b.simple_closed_boundary;
  return j;
}

json report_to_json(const SearchReport& rep) {
  json j;
  j["n"] = rep.n;
  j["best_energy"] = rep.best_energy;
  j["states_visited"] = rep.states_visited;
  j["method"] = rep.method;
  j["seed"] = rep.seed;
  json configs = json::array();
  for (const auto& cfg : rep.best_configurations) {
    configs.push_back(serialize_configuration(cfg));
  }
  j["best_configurations"] = configs;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"soft-disc crystallization toolkit"};
  app.require_subcommand(1);

  struct {
    std::int64_t n = 0;
    std::string in_path = "-";
    std::string out_path = "-";
    double delta = kDefaultDelta;
    std::uint64_t seed = 1;
    std::int64_t iters = 50;
    double box = 0.0;
    unsigned threads = 0;
    int max_n = 0;
    bool exhaustive = false;
    bool basin = false;
  } opt;

  auto* canonical = app.add_subcommand("canonical", "emit the n-point hexagonal spiral");
  canonical->add_option("--n", opt.n, "number of points")->required()->check(CLI::PositiveNumber);
  canonical->add_option("--delta", opt.delta, "interaction range");
  canonical->add_option("--out", opt.out_path, "output file, - for stdout");

  auto* energy = app.add_subcommand("energy", "total energy of a configuration");
  energy->add_option("--in", opt.in_path, "input file, - for stdin");
  auto* energy_delta = energy->add_option("--delta", opt.delta, "override the file's delta");

  auto* decompose_cmd = app.add_subcommand("decompose", "energy breakdown as JSON");
  decompose_cmd->add_option("--in", opt.in_path, "input file, - for stdin");
  auto* decompose_delta = decompose_cmd->add_option("--delta", opt.delta, "override delta");
  decompose_cmd->add_option("--out", opt.out_path, "output file, - for stdout");

  auto* minimize = app.add_subcommand("minimize", "search for minimum-energy configurations");
  minimize->add_option("--n", opt.n, "number of points")->required()->check(CLI::PositiveNumber);
  auto* flag_ex = minimize->add_flag("--exhaustive", opt.exhaustive,
                                     "enumerate all lattice animals (default)");
  auto* flag_bh = minimize->add_flag("--basin-hop", opt.basin, "stochastic continuous search");
  flag_ex->excludes(flag_bh);
  minimize->add_option("--iters", opt.iters, "basin hop restarts");
  minimize->add_option("--seed", opt.seed, "random seed");
  minimize->add_option("--delta", opt.delta, "interaction range");
  minimize->add_option("--box", opt.box, "sampling box side");
  minimize->add_option("--threads", opt.threads, "worker threads");
  minimize->add_option("--out", opt.out_path, "output file, - for stdout");

  auto* sample = app.add_subcommand("sample", "random feasible configuration");
  sample->add_option("--n", opt.n, "number of points")->required()->check(CLI::PositiveNumber);
  sample->add_option("--box", opt.box, "box side (default 2.5 sqrt(n))");
  sample->add_option("--seed", opt.seed, "random seed");
  sample->add_option("--delta", opt.delta, "interaction range");
  sample->add_option("--out", opt.out_path, "output file, - for stdout");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "numeric lemma checks as JSON");
  lemmas_cmd->add_option("--delta", opt.delta, "interaction range");
  lemmas_cmd->add_option("--seed", opt.seed, "random seed");
  auto* lemmas_iters = lemmas_cmd->add_option("--iters", opt.iters, "fan sample count");
  lemmas_cmd->add_option("--out", opt.out_path, "output file, - for stdout");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--max-n", opt.max_n, "cap every n range (0 = full suite)");
  verify->add_option("--threads", opt.threads, "worker threads (0 = auto)");

  auto* render = app.add_subcommand("render", "render a configuration as SVG");
  render->add_option("--in", opt.in_path, "input file, - for stdin");
  render->add_option("--out", opt.out_path, "output file, - for stdout")->required();
  auto* render_delta = render->add_option("--delta", opt.delta, "override delta");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("softdisc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (canonical->parsed()) {
      emit(opt.out_path, out, serialize_configuration(canonical_configuration(opt.n, opt.delta)));
      return 0;
    }

    if (energy->parsed()) {
      std::optional<double> od;
      if (energy_delta->count() > 0) od = opt.delta;
      Configuration cfg = load_configuration(opt.in_path, in, od);
      ExtReal e = total_energy(cfg);
      if (!e.finite) {
        out << "inf\n";
        err << "infeasible configuration: hard-core violation\n";
        return 1;
      }
      out << format_number(e.value) << "\n";
      return 0;
    }

    if (decompose_cmd->parsed()) {
      std::optional<double> od;
      if (decompose_delta->count() > 0) od = opt.delta;
      Configuration cfg = load_configuration(opt.in_path, in, od);
      EnergyBreakdown b = decompose(cfg);
      emit(opt.out_path, out, breakdown_to_json(b).dump(2) + "\n");
      return 0;
    }

    if (minimize->parsed()) {
      SearchReport rep;
      if (opt.basin) {
        BasinHopParams p;
        p.delta = opt.delta;
        p.box_side = opt.box;
        p.restarts = static_cast<int>(opt.iters);
        p.threads = opt.threads == 0 ? 1 : opt.threads;
        rep = basin_hop(static_cast<int>(opt.n), p, opt.seed);
      } else {
        rep = lattice_minimum(static_cast<int>(opt.n));
      }
      emit(opt.out_path, out, report_to_json(rep).dump(2) + "\n");
      return 0;
    }

    if (sample->parsed()) {
      double box = opt.box > 0.0
                       ? opt.box
                       : std::max(4.0, 2.5 * std::sqrt(static_cast<double>(opt.n)));
      Configuration cfg =
          random_feasible_configuration(static_cast<int>(opt.n), box, opt.seed, opt.delta);
      emit(opt.out_path, out, serialize_configuration(cfg));
      return 0;
    }

    if (lemmas_cmd->parsed()) {
      PotentialParams params{opt.delta};
      double top = zmax(opt.delta);
      json j;
      j["delta"] = opt.delta;
      j["delta_upper_bound"] = delta_upper_bound();
      j["zmax"] = top;
      bool nondecreasing = true;
      double prev = g_function(0.0, opt.delta);
      const int grid = 1001;
      for (int i = 0; i < grid; ++i) {
        double g = g_function(top * i / (grid - 1), opt.delta);
        if (g < prev - 1e-14) nondecreasing = false;
        prev = g;
      }
      j["g"] = {{"at_zero", g_function(0.0, opt.delta)},
                {"at_zmax", g_function(top, opt.delta)},
                {"grid_points", grid},
                {"nondecreasing", nondecreasing}};
      j["min_long_bond"] = {{"z_zero", min_long_bond_length(0.0)},
                            {"z_half", min_long_bond_length(0.5)}};
      std::uint64_t fans = lemmas_iters->count() > 0 ? static_cast<std::uint64_t>(opt.iters)
                                                     : 100000ULL;
      FanSurveyResult s = fan_survey(fans, params, opt.seed);
      j["fan_survey"] = {{"fans_checked", s.fans_checked},
                         {"min_margin", s.min_margin},
                         {"near_equality_count", s.near_equality_count},
                         {"near_equality_all_hexlike", s.near_equality_all_hexlike}};
      json shelling = json::array();
      for (std::int64_t side = 1; side <= 4; ++side) {
        std::int64_t n = 3 * side * side + 3 * side + 1;
        ShellingCheck c = shelling_check(canonical_configuration(n, opt.delta), params);
        shelling.push_back({{"n", n}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
      }
      j["shelling_hexagons"] = shelling;
      j["seed"] = opt.seed;
      emit(opt.out_path, out, j.dump(2) + "\n");
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions vo;
      vo.max_n = opt.max_n;
      vo.threads = opt.threads;
      auto results = run_acceptance(vo);
      for (const auto& r : results) {
        char line[32];
        std::snprintf(line, sizeof line, "[%2d/10] ", r.id);
        out << line << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      }
      bool ok = all_passed(results);
      out << (ok ? "all criteria passed\n" : "criteria failed\n");
      return ok ? 0 : 3;
    }

    if (render->parsed()) {
      std::optional<double> od;
      if (render_delta->count() > 0) od = opt.delta;
      Configuration cfg = load_configuration(opt.in_path, in, od);
      emit(opt.out_path, out, render_svg(cfg));
      return 0;
    }

    err << "no subcommand given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const infeasible_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const saturation_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace softdisc::cli
