// End-to-end tests of the command-line binary.  The binary path and the
// golden directory arrive via environment variables set by the test runner.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* p = std::getenv("PARKTRI_BIN");
  REQUIRE_MESSAGE(p != nullptr, "PARKTRI_BIN must point at the CLI binary");
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("PARKTRI_GOLDEN_DIR");
  REQUIRE_MESSAGE(p != nullptr, "PARKTRI_GOLDEN_DIR must point at tests/golden/v1");
  return p;
}

RunResult run_cli(const std::string& args) {
  std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("cli trees output is frozen") {
  RunResult r = run_cli("trees --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "((..).) (1,2)\n(.(..)) (2,1)\n");

  r = run_cli("trees --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_file(golden_dir() + "/trees_n3.txt"));

  r = run_cli("trees --n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == ". ()\n");

  r = run_cli("trees --n 8 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1430\n");

  r = run_cli("trees --n 4 --no-coords");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(((..).).)") != std::string::npos);
  CHECK(r.out.find("(1,") == std::string::npos);
}

TEST_CASE("cli trees json parses and counts") {
  RunResult r = run_cli("trees --n 4 --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("count").get<int>() == 14);
  CHECK(doc.at("trees").size() == 14);
  CHECK(doc.at("trees").at(0).at("coords").size() == 4);
  CHECK(doc.at("meta").at("n").get<int>() == 4);
}

TEST_CASE("cli trees rejects out-of-range requests") {
  CHECK(run_cli("trees --n 13").exit_code == 2);
  CHECK(run_cli("trees --n 13 --no-coords").exit_code == 0);
  CHECK(run_cli("trees --n 21 --no-coords").exit_code == 2);
  CHECK(run_cli("trees --n 21 --count-only").exit_code == 2);
  CHECK(run_cli("trees --n -1").exit_code == 2);
  CHECK(run_cli("trees").exit_code == 2);
  CHECK(run_cli("trees --n 2 --format yaml").exit_code == 2);
}

TEST_CASE("cli triangulate bundles match the goldens byte for byte") {
  for (int n = 0; n <= 4; ++n) {
    RunResult r = run_cli("triangulate --polytope assoc --n " + std::to_string(n));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/assoc_n" + std::to_string(n) + ".json"));
  }
  for (int n = 0; n <= 3; ++n) {
    RunResult r = run_cli("triangulate --polytope perm --n " + std::to_string(n));
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/perm_n" + std::to_string(n) + ".json"));
  }
}

TEST_CASE("cli off output matches the goldens") {
  RunResult r = run_cli("triangulate --polytope assoc --n 2 --format off");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_file(golden_dir() + "/assoc_n2.off"));

  r = run_cli("triangulate --polytope perm --n 3 --format off");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_file(golden_dir() + "/perm_n3.off"));
  CHECK(r.out.substr(0, 9) == "OFF\n24 34");
}

TEST_CASE("cli triangulate usage errors exit 2") {
  CHECK(run_cli("triangulate --polytope assoc --n 7").exit_code == 2);
  CHECK(run_cli("triangulate --polytope perm --n 4").exit_code == 2);
  CHECK(run_cli("triangulate --polytope cube --n 2").exit_code == 2);
  CHECK(run_cli("triangulate --polytope assoc --n 4 --format off").exit_code == 2);
  CHECK(run_cli("triangulate --polytope assoc --n 2 --format xml").exit_code == 2);
  CHECK(run_cli("triangulate --n 2").exit_code == 2);
}

TEST_CASE("cli verify passes and reports json") {
  RunResult r = run_cli("verify --polytope assoc --n 3");
  CHECK(r.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report.at("simplex_count").at("pass").get<bool>());
  CHECK(report.at("nondegenerate").at("abs_det_sum").get<std::string>() == "568");

  r = run_cli("verify --polytope perm --n 3 --samples 5 --hull-samples 20");
  CHECK(r.exit_code == 0);
  report = nlohmann::json::parse(r.out);
  CHECK(report.at("simplex_count").at("actual").get<int>() == 34);
  CHECK(report.at("facet_pairing").at("internal").get<int>() == 46);
}

TEST_CASE("cli verify re-checks exported bundles") {
  std::string tmp = "/tmp/parktri_cli_bundle.json";
  RunResult r = run_cli("triangulate --polytope assoc --n 3 --out " + tmp);
  REQUIRE(r.exit_code == 0);

  r = run_cli("verify --check-file " + tmp);
  CHECK(r.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report.at("bundle_match").at("pass").get<bool>());

  nlohmann::json bundle = nlohmann::json::parse(read_file(tmp));
  int old = bundle["simplices"][2]["vertices"][0].get<int>();
  bundle["simplices"][2]["vertices"][0] = old ^ 1;
  std::string bad = "/tmp/parktri_cli_bundle_bad.json";
  {
    std::ofstream out(bad, std::ios::binary);
    out << bundle.dump(2) << "\n";
  }
  r = run_cli("verify --check-file " + bad);
  CHECK(r.exit_code == 1);
  report = nlohmann::json::parse(r.out);
  CHECK_FALSE(report.at("bundle_match").at("pass").get<bool>());
  CHECK_FALSE(report.at("bundle_match").at("simplices_match").get<bool>());
  CHECK(report.at("bundle_match").at("vertices_match").get<bool>());

  {
    std::ofstream out(bad, std::ios::binary);
    out << "{not json";
  }
  CHECK(run_cli("verify --check-file " + bad).exit_code == 1);
  CHECK(run_cli("verify --check-file /tmp/parktri_no_such_file.json").exit_code == 1);
}

TEST_CASE("cli runs are byte-identical for identical arguments") {
  const char* cmds[] = {"triangulate --polytope assoc --n 4",
                        "triangulate --polytope perm --n 3 --seed 7",
                        "triangulate --polytope assoc --n 3 --format off",
                        "verify --polytope assoc --n 4",
                        "trees --n 5 --format json"};
  for (const char* cmd : cmds) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli parking table and decomposition are frozen") {
  RunResult r = run_cli("parking --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_file(golden_dir() + "/parking_n3.txt"));

  r = run_cli("parking --decompose 3,6,1,7,2,1,3,6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a=3 p=4 q=3 f=(1,2,1,3) g=(1,2,1) theta=VUVUUUV\n");

  r = run_cli("parking --decompose 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a=1 p=0 q=0 f=() g=() theta=\n");

  CHECK(run_cli("parking --decompose 2,2,4").exit_code == 1);
  CHECK(run_cli("parking --decompose 1,oops").exit_code == 1);
  CHECK(run_cli("parking --n 9").exit_code == 2);
  CHECK(run_cli("parking").exit_code == 2);
}

TEST_CASE("cli counts tables are frozen") {
  RunResult r = run_cli("counts --what zp --n-max 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_file(golden_dir() + "/counts_zp.txt"));

  r = run_cli("counts --what simplices --n-max 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 1\n2 3\n3 16\n4 125\n5 1296\n6 16807\n");

  r = run_cli("counts --what parking --n-max 30");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("30 17761887753093897979823770061456102763834271\n") != std::string::npos);

  CHECK(run_cli("counts --what zp --n-max 9").exit_code == 2);
  CHECK(run_cli("counts --what simplices --n-max 0").exit_code == 2);
  CHECK(run_cli("counts --what foo --n-max 3").exit_code == 2);
}

TEST_CASE("cli global usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
}
