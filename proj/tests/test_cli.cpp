// End-to-end checks of the command-line tool: exit codes, JSON output
// values, and the byte-exact Betti diagram rendering.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  std::string cmd =
      std::string("env -u TSPREAD_MAX_N '") + TSPREAD_CLI_PATH + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("betti diagram of the residue-class ideal renders byte-exactly") {
  CliResult r = run_cli("betti --n 10 --pascal-t 3 --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "     0 1 2 3\n"
        "Tot: 1 3 3 1\n"
        "  0: 1 - - -\n"
        "  1: - - - -\n"
        "  2: - 2 - -\n"
        "  3: - 1 - -\n"
        "  4: - - 1 -\n"
        "  5: - - 2 -\n"
        "  6: - - - -\n"
        "  7: - - - 1\n");
}

TEST_CASE("invariants reports the worked three-generator ideal") {
  CliResult r =
      run_cli("invariants '{\"n\":11,\"generators\":[[2,4],[1,5,7],[3,7,9,11]]}'");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["n"] == 11);
  CHECK(j["support_index"] == 2);
  CHECK(j["bcos"] == 3);
  CHECK(j["cosize"] == 5);
  CHECK(j["pd_bound"] == 2);
  CHECK(j["reg_bound"] == 6);
  CHECK(j["pd"] == 2);
  CHECK(j["reg"] == 6);
  CHECK(j["depth"] == 9);
}

TEST_CASE("invariants accepts monomial text and table format") {
  CliResult r = run_cli("invariants 'x2*x4, x1*x5*x7, x3*x7*x9*x11' --format table");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("support index: 2") != std::string::npos);
  CHECK(r.output.find("pd: 2") != std::string::npos);
  CHECK(r.output.find("reg: 6") != std::string::npos);
  CHECK(r.output.find("depth: 9") != std::string::npos);
}

TEST_CASE("json output is stable across runs") {
  CliResult a = run_cli("invariants 'x1*x4, x1*x3*x8, x2*x4*x6, x1*x3*x5*x7*x9'");
  CliResult b = run_cli("invariants 'x1*x4, x1*x3*x8, x2*x4*x6, x1*x3*x5*x7*x9'");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  json j = json::parse(a.output);
  CHECK(j["support_index"] == 3);
  CHECK(j["pd_bound"] == 3);
  CHECK(j["reg_bound"] == 7);
  CHECK(j["pd"] == 2);
  CHECK(j["reg"] == 5);
}

TEST_CASE("bounds avoids the resolution and still reports the support data") {
  CliResult r = run_cli("bounds 'x8, x1*x2, x3*x4*x5*x7' --n 8");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["support_index"] == 2);
  CHECK(j["cosize"] == 4);
  CHECK(j["reg_bound"] == 5);
}

TEST_CASE("betti supports the ideal subject") {
  CliResult r = run_cli("betti 'x1*x2, x2*x3' --n 3 --subject ideal");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["subject"] == "ideal");
  CHECK(j["pd"] == 1);
  CHECK(j["reg"] == 2);
  bool found_02 = false;
  for (const json& e : j["entries"])
    if (e["i"] == 0 && e["j"] == 2 && e["value"] == 2) found_02 = true;
  CHECK(found_02);
}

TEST_CASE("taylor prints the step degree multisets") {
  CliResult r = run_cli("taylor 'x1*x4, x1*x3*x8, x2*x4*x6, x1*x3*x5*x7*x9'");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["steps"] == json::parse("[[2,3,3,5],[4,4,6,6,6,8],[6,7,8,9],[9]]"));
  CHECK(j["length"] == 3);
}

TEST_CASE("pascal emits the closed forms") {
  CliResult r = run_cli("pascal --n 10 --t 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["residue"] == 1);
  CHECK(j["layer"] == 3);
  CHECK(j["total_betti"] == json::parse("[1,3,3,1]"));
  CHECK(j["ft_vector"] == json::parse("[1,10,28,18,0]"));
  CHECK(j["hilbert_numerator"] == json::parse("[1,3,6,8,8,6,3,1]"));
  CHECK(j["hilbert_denominator_exponent"] == 7);
  CHECK(j["tlex"] == json::parse("[[1,4,7],[1,4,8]]"));
}

TEST_CASE("tlex reports absence with the shadow witness") {
  CliResult r = run_cli("tlex --n 12 --t 5");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["exists"] == false);
  CHECK(j["witness"]["discrepancy"] == 3);
  CHECK(j["witness"]["residue"] == 2);

  CliResult yes = run_cli("tlex --n 10 --t 3");
  REQUIRE(yes.exit_code == 0);
  json jy = json::parse(yes.output);
  CHECK(jy["exists"] == true);
  CHECK(jy["generators"] == json::parse("[[1,4,7],[1,4,8]]"));
}

TEST_CASE("ftvector counts spread monomials outside the ideal") {
  CliResult r = run_cli("ftvector 'x1*x3' --n 4 --t 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["entries"] == json::parse("[1,4,2]"));
}

TEST_CASE("hilbert reports values and the series for complete intersections") {
  CliResult r = run_cli("hilbert 'x1*x2' --n 2 --up-to 5");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["values"] == json::parse("[1,2,2,2,2,2]"));
  CHECK(j["numerator"] == json::parse("[1,1]"));
  CHECK(j["denominator_exponent"] == 1);
}

TEST_CASE("edge-ideal reports graph invariants") {
  CliResult r = run_cli("edge-ideal '1-4,2-5,3-6'");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["n"] == 6);
  CHECK(j["is_forest"] == true);
  CHECK(j["induced_matching_number"] == 3);
  CHECK(j["regularity"] == 4);
  CHECK(j["regularity_resolution"] == 4);
}

TEST_CASE("dual emits the minimal transversals") {
  CliResult r = run_cli("dual 'x1*x2, x2*x3' --n 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["generators"] == json::parse("[[2],[1,3]]"));
}

TEST_CASE("malformed input exits 2 and names the offending token") {
  CliResult r = run_cli("invariants 'x2*q4'");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("q") != std::string::npos);

  CliResult g = run_cli("edge-ideal '1_4'");
  CHECK(g.exit_code == 2);

  CliResult bad_json = run_cli("invariants '{\"n\":4'");
  CHECK(bad_json.exit_code == 2);

  CliResult missing = run_cli("invariants --file /nonexistent/ideal.txt");
  CHECK(missing.exit_code == 2);

  CliResult no_sub = run_cli("frobnicate");
  CHECK(no_sub.exit_code == 2);
}

TEST_CASE("domain errors exit 1") {
  CliResult r = run_cli("pascal --n 3 --t 5");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error") != std::string::npos);

  CliResult guard = run_cli("betti 'x1*x15' --n 15");
  CHECK(guard.exit_code == 1);
  CHECK(guard.output.find("guard") != std::string::npos);
}

TEST_CASE("help exits 0") {
  CliResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("invariants") != std::string::npos);
  CHECK(r.output.find("reproduce") != std::string::npos);
}

TEST_CASE("reproduce passes every worked example") {
  CliResult r = run_cli("reproduce");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS]") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
  CHECK(r.output.find("0 failed") != std::string::npos);
}

TEST_CASE("reproduce with a short fuzz battery passes") {
  CliResult r = run_cli("reproduce --fuzz --count 60");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
}
