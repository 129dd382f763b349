#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string binary() {
  const char* p = std::getenv("NFCERT_BIN");
  REQUIRE_MESSAGE(p != nullptr, "NFCERT_BIN must point at the executable");
  return p;
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json parse(const RunResult& r) {
  CAPTURE(r.out);
  return json::parse(r.out);
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

// truncated 3-d system with frequency 1 and slots (1, 1, 1, 2)
void write_truncated_spec(const std::string& path) {
  json terms = json::array();
  auto term = [&](int comp, std::vector<int> e, int num, int den) {
    terms.push_back({{"component", comp},
                     {"exponents", e},
                     {"coeff", {{"num", num}, {"den", den}}}});
  };
  term(1, {0, 1, 0}, -1, 1);
  term(1, {1, 0, 1}, 1, 1);
  term(1, {0, 1, 1}, -1, 1);
  term(2, {1, 0, 0}, 1, 1);
  term(2, {1, 0, 1}, 1, 1);
  term(2, {0, 1, 1}, 1, 1);
  term(3, {2, 0, 0}, 1, 1);
  term(3, {0, 2, 0}, 1, 1);
  term(3, {0, 0, 2}, 2, 1);
  std::ofstream(path) << json{{"dim", 3}, {"terms", terms}};
}

}  // namespace

TEST_CASE("analyze: exact family parameter gives an exact-fraction certificate") {
  auto r = run("analyze --family rossler --a 9/10");
  CHECK(r.status == 2);
  json rep = parse(r);
  CHECK(rep["verdict"]["outcome"] == "Inconclusive");
  CHECK(rep["verdict"]["rationality"]["status"] == "ExactRational");
  CHECK(rep["verdict"]["rationality"]["p"] == "-200");
  CHECK(rep["verdict"]["rationality"]["q"] == "81");
  CHECK(rep["input"]["metadata"]["family"] == "rossler");
}

TEST_CASE("analyze: floating parameter with an irrational-looking ratio certifies") {
  auto r = run("analyze --family rossler --a 0.8408964152537145");
  CHECK(r.status == 0);
  json rep = parse(r);
  CHECK(rep["verdict"]["outcome"] == "Nonintegrable");
  CHECK(rep["verdict"]["fired_condition"] == "main1.ii");
  CHECK(rep["verdict"]["rationality"]["status"] == "LikelyIrrational");
}

TEST_CASE("analyze: four-dimensional family") {
  auto r = run("analyze --family vdp");
  CHECK(r.status == 0);
  json rep = parse(r);
  CHECK(rep["verdict"]["outcome"] == "Nonintegrable");
  CHECK(rep["verdict"]["fired_condition"] == "main2.ii");
}

TEST_CASE("analyze: errors are json with a machine-readable code") {
  auto r = run("analyze /tmp/nfcert_cli_missing.json");
  CHECK(r.status == 1);
  json rep = parse(r);
  CHECK(rep["error"]["code"] == "ParseError");

  // constant terms: the origin is not an equilibrium
  {
    json terms = json::array();
    terms.push_back({{"component", 1},
                     {"exponents", {0, 0, 0}},
                     {"coeff", {{"num", 1}, {"den", 1}}}});
    terms.push_back({{"component", 2},
                     {"exponents", {0, 1, 0}},
                     {"coeff", {{"num", 1}, {"den", 1}}}});
    std::ofstream("/tmp/nfcert_cli_noneq.json") << json{{"dim", 3}, {"terms", terms}};
  }
  auto ne = run("analyze /tmp/nfcert_cli_noneq.json");
  CHECK(ne.status == 1);
  CHECK(parse(ne)["error"]["code"] == "NotAnEquilibrium");

  // a spec file and a family at once is ambiguous
  auto both = run("analyze /tmp/nfcert_cli_noneq.json --family rossler --a 1/2");
  CHECK(both.status == 1);

  // unknown flags fail fast
  CHECK(run("analyze --definitely-not-a-flag").status != 0);
  CHECK(run("").status != 0);
}

TEST_CASE("example: emitted spec analyzes with the exact certificate intact") {
  auto ex = run("example --family rossler --a 3/10 --out /tmp/nfcert_cli_ex.json");
  CHECK(ex.status == 0);
  json paths = parse(ex);
  CHECK(paths["spec_path"] == "/tmp/nfcert_cli_ex.json");
  std::ifstream side(paths["sidecar_path"].get<std::string>());
  CHECK(side.good());

  auto r = run("analyze /tmp/nfcert_cli_ex.json");
  CHECK(r.status == 2);
  json rep = parse(r);
  CHECK(rep["verdict"]["rationality"]["status"] == "ExactRational");
  CHECK(rep["verdict"]["rationality"]["p"] == "-200");
  CHECK(rep["verdict"]["rationality"]["q"] == "9");
}

TEST_CASE("simulate: radial reduction uses its own column names") {
  write_truncated_spec("/tmp/nfcert_cli_trunc.json");
  auto r = run("simulate /tmp/nfcert_cli_trunc.json --planar --x0 0.1,-0.05 --t-end 1");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "t,r,x3,Q");

  auto full = run("simulate /tmp/nfcert_cli_trunc.json --x0 0.1,0,-0.05 --t-end 1");
  CHECK(full.status == 0);
  CHECK(first_line(full.out) == "t,x1,x2,x3");
}

TEST_CASE("simulate: paired comparison stays tight on a truncated system") {
  write_truncated_spec("/tmp/nfcert_cli_trunc.json");
  auto r = run(
      "simulate /tmp/nfcert_cli_trunc.json --compare-planar --x0 0.1,0,-0.05 --t-end 2");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "t,r_full,x3_full,r_planar,x3_planar");

  auto pos = r.out.find("# max_deviation = ");
  REQUIRE(pos != std::string::npos);
  double dev = std::stod(r.out.substr(pos + 18));
  CHECK(dev <= 1e-6);
}

TEST_CASE("sweep: one json line per parameter value") {
  auto r = run("analyze --family rossler --sweep a=0.3:0.5:0.1");
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json row = json::parse(line);
    CHECK(row.contains("a"));
    CHECK(row.contains("outcome"));
    ++count;
  }
  CHECK(count == 3);
}
