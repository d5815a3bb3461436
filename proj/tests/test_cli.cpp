#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "softdisc/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliResult r;
  r.code = softdisc::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("canonical emits a parseable spiral") {
  auto r = run_cli({"canonical", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("delta") == std::string::npos);
  int lines = 0;
  std::istringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line)) {
    ++lines;
    CHECK(line.rfind("L ", 0) == 0);
  }
  CHECK(lines == 7);

  auto e = run_cli({"energy"}, r.out);
  CHECK(e.code == 0);
  CHECK(e.out == "-12\n");
}

TEST_CASE("canonical honors a nondefault delta") {
  auto r = run_cli({"canonical", "--n", "3", "--delta", "0.1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("delta 0.1", 0) == 0);
}

TEST_CASE("energy of an infeasible configuration") {
  auto r = run_cli({"energy"}, "E 0 0\nE 0.4 0\n");
  CHECK(r.code == 1);
  CHECK(r.out == "inf\n");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("energy reports full precision") {
  auto r = run_cli({"energy"}, "E 0 0\nE 1.02 0\n");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 3) == "-0.");
  CHECK(r.out.size() > 10);
}

TEST_CASE("decompose emits the breakdown as JSON") {
  auto spiral = run_cli({"canonical", "--n", "19"});
  auto r = run_cli({"decompose"}, spiral.out);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 19);
  CHECK(j["total"] == -42.0);
  CHECK(j["bond_count"] == 42);
  CHECK(j["per_gr"] == 12);
  CHECK(j["defect"] == 0);
  CHECK(j["euler_characteristic"] == 1);
  CHECK(j["simple_closed_boundary"] == true);
  CHECK(std::abs(j["residual"].get<double>()) <= 1e-9);
}

TEST_CASE("minimize is exhaustive by default and reproducible") {
  auto a = run_cli({"minimize", "--n", "5"});
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["method"] == "exhaustive");
  CHECK(j["best_energy"] == -7.0);
  CHECK(j["states_visited"] == 22);
  CHECK(j["best_configurations"].size() >= 1);

  auto b = run_cli({"minimize", "--n", "5"});
  CHECK(a.out == b.out);
}

TEST_CASE("basin hop minimize is deterministic for a fixed seed") {
  std::vector<std::string> args{"minimize", "--n",    "4",   "--basin-hop", "--iters", "6",
                                "--seed",   "3",      "--box", "2.2",        "--threads", "2"};
  auto a = run_cli(args);
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["method"] == "basin_hop");
  CHECK(j["seed"] == 3);
  CHECK(j["best_energy"].get<double>() >= -5.0 - 1e-9);
  CHECK(j["best_energy"].get<double>() < 0.0);

  auto b = run_cli(args);
  CHECK(a.out == b.out);
}

TEST_CASE("exhaustive and basin-hop flags exclude each other") {
  auto r = run_cli({"minimize", "--n", "4", "--exhaustive", "--basin-hop"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("sample is deterministic in the seed") {
  auto a = run_cli({"sample", "--n", "8", "--box", "6", "--seed", "5"});
  REQUIRE(a.code == 0);
  auto b = run_cli({"sample", "--n", "8", "--box", "6", "--seed", "5"});
  CHECK(a.out == b.out);
  auto c = run_cli({"sample", "--n", "8", "--box", "6", "--seed", "6"});
  CHECK(a.out != c.out);

  int lines = 0;
  std::istringstream ss(a.out);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("E ", 0) == 0) ++lines;
  }
  CHECK(lines == 8);
}

TEST_CASE("sample saturates in an overfull box") {
  auto r = run_cli({"sample", "--n", "200", "--box", "10", "--seed", "7"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("lemmas report") {
  std::vector<std::string> args{"lemmas", "--iters", "2000", "--seed", "11"};
  auto a = run_cli(args);
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["zmax"].get<double>() == doctest::Approx(0.043819932862702543).epsilon(1e-12));
  CHECK(std::abs(j["g"]["at_zero"].get<double>()) <= 1e-14);
  CHECK(j["g"]["nondecreasing"] == true);
  CHECK(j["min_long_bond"]["z_zero"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j["fan_survey"]["fans_checked"] == 2005);
  CHECK(j["fan_survey"]["min_margin"].get<double>() >= -1e-12);
  CHECK(j["fan_survey"]["near_equality_all_hexlike"] == true);
  REQUIRE(j["shelling_hexagons"].size() == 4);
  for (const auto& row : j["shelling_hexagons"]) {
    CHECK(row["holds"] == true);
  }

  auto b = run_cli(args);
  CHECK(a.out == b.out);
}

TEST_CASE("render produces an SVG document") {
  auto spiral = run_cli({"canonical", "--n", "7"});
  auto r = run_cli({"render", "--out", "-"}, spiral.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);

  auto missing = run_cli({"render"}, spiral.out);
  CHECK(missing.code == 2);
}

TEST_CASE("file input and output round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "softdisc_cli_test";
  fs::create_directories(dir);
  fs::path cfg = dir / "spiral.txt";

  auto w = run_cli({"canonical", "--n", "12", "--out", cfg.string()});
  REQUIRE(w.code == 0);
  CHECK(w.out.empty());

  auto e = run_cli({"energy", "--in", cfg.string()});
  CHECK(e.code == 0);
  CHECK(e.out == "-24\n");

  fs::remove_all(dir);
}

TEST_CASE("bad inputs yield parse errors") {
  auto r = run_cli({"energy"}, "Q 1 2\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);

  auto missing = run_cli({"energy", "--in", "/nonexistent/file.txt"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"energy", "--bogus"}).code == 2);
  CHECK(run_cli({"canonical", "--n", "0"}).code == 2);
  CHECK(run_cli({"canonical", "--n", "-3"}).code == 2);

  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("canonical") != std::string::npos);
}
