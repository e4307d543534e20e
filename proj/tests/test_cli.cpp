#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "g2cal/catalog.hpp"
#include "g2cal/cli.hpp"

using namespace g2cal;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes text to a unique temp file and returns its path.
std::string temp_file(const std::string& text) {
  static int counter = 0;
  std::string path =
      "/tmp/g2cal_cli_test_" + std::to_string(++counter) + ".txt";
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("help and list-examples") {
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("su3-report") != std::string::npos);
  auto list = run({"list-examples"});
  CHECK(list.code == 0);
  for (const auto& n : catalog_names())
    CHECK(list.out.find(n) != std::string::npos);
}

TEST_CASE("bad invocations exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"su3-report"}).code == 2);  // missing argument
}

TEST_CASE("runtime failures exit with 1") {
  auto r = run({"su3-report", "/nonexistent/file"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error") != std::string::npos);
  // A G2-only entry has no 6-dimensional report.
  CHECK(run({"su3-report", "nil2step"}).code == 1);
}

TEST_CASE("text reports for catalog entries") {
  auto r = run({"su3-report", "nil3step"});
  CHECK(r.code == 0);
  CHECK(r.out.find("half_flat: yes") != std::string::npos);
  CHECK(r.out.find("W1-") != std::string::npos);
  auto g = run({"g2-report", "nil2step"});
  CHECK(g.code == 0);
  CHECK(g.out.find("calibrated: yes") != std::string::npos);
  CHECK(g.out.find("nearly_parallel: yes") != std::string::npos);
}

TEST_CASE("json output is deterministic and placement-insensitive") {
  auto a = run({"--json", "su3-report", "nil3step"});
  auto b = run({"su3-report", "nil3step", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"w1-\": \"-1/6\"") != std::string::npos);
  CHECK(run({"--json", "su3-report", "nil3step"}).out == a.out);
}

TEST_CASE("validate and report on a structure file") {
  std::string path = temp_file(
      "dim 6\n"
      "d e3 = e25\n"
      "d e6 = -e24\n"
      "omega = e12 + e34 + e56\n"
      "psi+ = e135 - e146 - e236 - e245\n"
      "psi- = e136 + e145 + e235 - e246\n");
  auto v = run({"validate", path});
  CHECK(v.code == 0);
  CHECK(v.out.find("valid") != std::string::npos);
  auto r = run({"su3-report", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("W2-") != std::string::npos);
  auto c = run({"correspondence", path});
  CHECK(c.code == 0);
  CHECK(c.out.find("correspondence verified") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("a parse error in the file is a runtime failure") {
  std::string path = temp_file("dim 6\nd e3 = e99\n");
  auto r = run({"validate", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("error") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("flow writes a csv trajectory") {
  std::string csv_path = "/tmp/g2cal_cli_test_flow.csv";
  auto r = run({"flow", "torus6", "--t0", "1", "--t1", "1.05", "--dt",
                "0.01", "--csv", csv_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("steps: 5") != std::string::npos);
  std::ifstream csv(csv_path);
  REQUIRE(bool(csv));
  std::string header;
  std::getline(csv, header);
  CHECK(header.rfind("t,", 0) == 0);
  std::remove(csv_path.c_str());
}

TEST_CASE("correspondence with an explicit rho file") {
  std::string rho_path = temp_file("dim 6\nrho = e12 - e34\n");
  auto r = run({"correspondence", "torus6", "--rho", rho_path, "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"ok\": true") != std::string::npos);
  std::remove(rho_path.c_str());
}
