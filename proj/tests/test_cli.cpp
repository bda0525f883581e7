/*
 * test_cli.cpp -- end-to-end tests of the command-line tool: every
 * subcommand is exercised through a real subprocess against JSON fixture
 * files, checking exact human-readable output, JSON output agreement, exit
 * codes, and error reporting on malformed input.
 *
 * The binary path is taken from CONCORD_BIN and the shipped data directory
 * from CONCORD_DATA (both set by the build harness).
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "concord/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static fs::path dir = [] {
    auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    fs::path d = fs::temp_directory_path() /
                 ("concord_cli_test_" + std::to_string(stamp));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::vector<std::string>& args) {
  const char* bin = std::getenv("CONCORD_BIN");
  REQUIRE(bin != nullptr);
  fs::path out_file = work_dir() / "stdout.txt";
  fs::path err_file = work_dir() / "stderr.txt";
  std::string cmd = shell_quote(bin);
  for (const std::string& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(out_file.string()) + " 2> " +
         shell_quote(err_file.string());
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

/** Write a fixture file into the test working directory. */
std::string fixture(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("CONCORD_DATA");
  REQUIRE(dir != nullptr);
  return (fs::path(dir) / name).string();
}

const std::string& tref() {
  static std::string p =
      fixture("tref.json", R"({"matrix": [[-1, 1], [0, -1]]})");
  return p;
}

const std::string& t7() {
  static std::string p = fixture("t7.json", R"({"matrix": [[-7, 1], [0, 1]]})");
  return p;
}

const std::string& t7sum() {
  static std::string p = fixture(
      "t7sum.json",
      R"({"matrix": [[-7, 1, 0, 0], [0, 1, 0, 0], [0, 0, -7, 1], [0, 0, 0, 1]]})");
  return p;
}

}  // namespace

TEST_CASE("alex prints the canonical Alexander polynomial") {
  RunResult r = run({"alex", "--matrix", tref()});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "t^2 - t + 1\n");
  CHECK(r.err.empty());

  r = run({"alex", "--matrix", t7()});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "7*t^2 - 15*t + 7\n");
}

TEST_CASE("alex --json round-trips through the JSON reader") {
  using namespace concord;
  RunResult r = run({"alex", "--json", "--matrix", tref()});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  LaurentPoly expect = LaurentPoly::monomial(2, Rat(1)) +
                       LaurentPoly::monomial(1, Rat(-1)) +
                       LaurentPoly::constant(Rat(1));
  CHECK(laurent_from_json(j.at("alexander")) == expect);

  // The global flag also parses before the subcommand.
  RunResult r2 = run({"--json", "alex", "--matrix", tref()});
  CHECK(r2.exit_code == 0);
  CHECK(Json::parse(r2.out) == j);
}

TEST_CASE("sig evaluates at a point and prints the arc table") {
  RunResult r = run({"sig", "--matrix", tref(), "--at", "0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "signature at u = 0: -2\n");

  r = run({"sig", "--matrix", tref()});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "signature function (upper semicircle, arcs in increasing theta):\n"
        "  sigma = 0\n"
        "  jump at theta/pi = 1/3\n"
        "  sigma = -2\n");

  // Evaluation at a jump point or off the chord range is an input error.
  r = run({"sig", "--matrix", tref(), "--at", "1"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("at jump point") != std::string::npos);
  r = run({"sig", "--matrix", tref(), "--at", "7/2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("outside [-2, 2]") != std::string::npos);
}

TEST_CASE("rho0 reports exact values in text and JSON") {
  RunResult r = run({"rho0", "--matrix", tref()});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "rho0 = -4/3 (exact)\n");

  r = run({"rho0", "--json", "--matrix", tref()});
  REQUIRE(r.exit_code == 0);
  concord::Json j = concord::Json::parse(r.out);
  CHECK(j.at("exact").get<std::string>() == "-4/3");
  CHECK(j.at("lo").get<std::string>() == "-4/3");
  CHECK(j.at("hi").get<std::string>() == "-4/3");
}

TEST_CASE("blanchfield prints the linking-form value") {
  std::string e1 = fixture("e1.json", R"({"coords": [{"0": "1"}, {}]})");
  RunResult r = run({"blanchfield", "--matrix", tref(), "--r", e1, "--s", e1});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "Bl(r, s) = (t) / (t^2 - t + 1) in Q(t)/Q[t^+-1]\n");

  // Localized at a polynomial coprime to the denominator the class dies.
  std::string p = fixture("t_minus_3.json", R"({"1": "1", "0": "-3"})");
  r = run({"blanchfield", "--matrix", tref(), "--r", e1, "--s", e1, "--mod-p",
           p});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("= 0 in") != std::string::npos);
}

TEST_CASE("isotropic distinguishes isotropic generators and reports failures") {
  std::string zero = fixture("gens_zero.json", R"([{"coords": [{}, {}]}])");
  RunResult r = run({"isotropic", "--matrix", tref(), "--gens", zero});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "isotropic: yes\n");

  std::string e1 = fixture("gens_e1.json", R"([{"coords": [{"0": "1"}, {}]}])");
  r = run({"isotropic", "--matrix", tref(), "--gens", e1});
  CHECK(r.exit_code == 1);
  CHECK(r.out == "isotropic: no\n");
  CHECK(r.err.find("verification failure") != std::string::npos);
}

TEST_CASE("metab verify and search") {
  std::string vecs =
      fixture("mvec.json", R"({"vectors": [[1, 2, 0, 1], [0, 1, 1, -3]]})");
  RunResult r = run({"metab", "verify", "--matrix", t7sum(), "--vectors", vecs});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "metabolizer verified: yes\n");

  r = run({"metab", "search", "--matrix", t7sum(), "--height", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "no metabolizer with entries of height <= 2\n");

  r = run({"metab", "search", "--matrix", t7sum(), "--height", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("metabolizer found:\n") == 0);

  r = run({"metab", "search", "--matrix", tref(), "--height", "4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "no metabolizer with entries of height <= 4\n");
}

TEST_CASE("module smith and independence checks") {
  RunResult r = run({"module", "smith", "--matrix", t7sum()});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "dimension: 4\n"
        "divisors: 7*t^2 - 15*t + 7, 7*t^2 - 15*t + 7\n");

  std::string indep = fixture(
      "elems4.json",
      R"([{"coords": [{"0": "1"}, {}, {}, {}]}, {"coords": [{}, {}, {"0": "1"}, {}]}])");
  r = run({"module", "independent", "--matrix", t7sum(), "--elements", indep});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "integrally independent: yes\n");

  std::string dep = fixture(
      "elems4dep.json",
      R"([{"coords": [{"0": "1"}, {}, {}, {}]}, {"coords": [{"0": "3"}, {}, {}, {}]}])");
  r = run({"module", "independent", "--matrix", t7sum(), "--elements", dep});
  CHECK(r.exit_code == 1);
  CHECK(r.out == "integrally independent: no\n");
  CHECK(r.err.find("integer dependence") != std::string::npos);
}

TEST_CASE("aniso reports the localized anisotropy criterion") {
  std::string p = fixture("delta7.json", R"({"2": "7", "1": "-15", "0": "7"})");
  RunResult r = run({"aniso", "--matrix", t7(), "--p", p});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "anisotropic at p: yes\n");
}

TEST_CASE("l2sig computes exact values and quadrature enclosures") {
  std::string m = fixture(
      "tplus.json",
      R"({"nvars": 1, "entries": [[[{"exps": [1], "coeff": "1"}, {"exps": [-1], "coeff": "1"}]]]})");
  RunResult r = run({"l2sig", "--matrix", m});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 (exact)\n");

  r = run({"l2sig", "--matrix", m, "--depth", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[") != std::string::npos);  // interval output
}

TEST_CASE("ledger replay verifies the shipped derivation") {
  RunResult r = run({"ledger", "replay", data_file("twist_chain.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("premain_bound") != std::string::npos);
  CHECK(r.out.find("[-inf, -1/2]") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("twist report replays its certificates") {
  RunResult r = run({"twist", "report", "--x", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("certificate replay: verified") != std::string::npos);

  r = run({"twist", "report", "--json", "--x", "2"});
  REQUIRE(r.exit_code == 0);
  concord::Json j = concord::Json::parse(r.out);
  CHECK(j.at("replay_verified").get<bool>());
  REQUIRE(j.at("entries").is_array());
  CHECK(j.at("entries").size() == 1);
  CHECK(j.at("entries")[0].at("rho1").at("hi").get<std::string>() == "-1/2");
}

TEST_CASE("twist family emits machine-readable fixtures") {
  RunResult r = run({"twist", "family", "--x", "2"});
  REQUIRE(r.exit_code == 0);
  concord::Json j = concord::Json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("n").get<long>() == -7);
  CHECK(j[0].at("name").get<std::string>() == "T-7");
}

TEST_CASE("input errors exit with code 2 and a diagnostic") {
  std::string broken = fixture("broken.json", "{\n  \"matrix\": [[1, 2]\n}\n");
  RunResult r = run({"alex", "--matrix", broken});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("input error") != std::string::npos);
  CHECK(r.err.find("line") != std::string::npos);

  std::string bad = fixture("bad.json", R"({"matrix": [[1, 1], [1, 1]]})");
  r = run({"alex", "--matrix", bad});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("det(V - V^T) != 1") != std::string::npos);

  r = run({"alex", "--matrix", (work_dir() / "does-not-exist.json").string()});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"alex", "--matrix", tref(), "--nope"}).exit_code == 2);
  CHECK(run({"alex"}).exit_code == 2);  // missing required --matrix
  RunResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("CONCORDANCE_PRECISION_BITS") != std::string::npos);
}
