#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "mzv/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = mzv::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("products in text form") {
  const Run r = run({"shuffle", "x", "y", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "xy + yx\n");
  CHECK(run({"shuffle", "xy", "xy"}).out == "4*x^2y^2 + 2*xyxy\n");
  CHECK(run({"harmonic", "xy", "xy"}).out == "x^3y + 2*xyxy\n");
  CHECK(run({"shuffle", "(1+w)*x", "y", "--root-order", "3"}).code == 0);
}

TEST_CASE("products in JSON and LaTeX") {
  const Run r = run({"shuffle", "xy", "xy", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["operation"] == "shuffle");
  CHECK(j["terms"].size() == 2);
  CHECK(run({"shuffle", "x", "y", "--format", "latex"}).out.find("xy") != std::string::npos);
}

TEST_CASE("zeta values") {
  const Run ok = run({"zeta", "3,1", "--format", "json"});
  REQUIRE(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["value"].get<double>() == doctest::Approx(0.2705808084277845).epsilon(1e-8));
  CHECK(j["cutoff"] == 100000);

  const Run bad = run({"zeta", "1,2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: Inadmissible", 0) == 0);
  CHECK(bad.out.empty());
}

TEST_CASE("MZV_CUTOFF overrides the default cutoff") {
  ::setenv("MZV_CUTOFF", "1000", 1);
  const auto env = nlohmann::json::parse(run({"zeta", "2", "--format", "json"}).out);
  const auto flag = nlohmann::json::parse(run({"zeta", "2", "--format", "json", "--cutoff", "500"}).out);
  ::unsetenv("MZV_CUTOFF");
  CHECK(env["cutoff"] == 1000);
  CHECK(flag["cutoff"] == 500);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"shuffle", "xy"}).code == 2);
  CHECK(run({"shuffle", "x", "y", "--frobnicate"}).code == 2);
  CHECK(run({"shuffle", "xz", "y"}).code == 2);
  CHECK(run({"shuffle", "x", "y", "--format", "yaml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("Kleene closures and automata") {
  const Run s = run({"star-shuffle", "--factor", "1:xy", "--factor", "-1:xy", "--max-weight", "8"});
  CHECK(s.code == 0);
  CHECK(s.out == "1 - 4*x^2y^2 + 16*x^2y^2x^2y^2\n");

  const Run a = run({"automaton", "--factor", "1:xy", "--factor", "-1:xy", "--format", "json"});
  REQUIRE(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["states"] == 4);
  CHECK(j.contains("transitions"));
}

TEST_CASE("verify reports") {
  const Run w = run({"verify", "waldschmidt", "--max-weight", "16", "--format", "json"});
  CHECK(w.code == 0);
  const auto j = nlohmann::json::parse(w.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "pass");

  CHECK(run({"verify", "dim3", "--n", "1", "--root-order", "3"}).code == 0);
  CHECK(run({"verify", "sawada", "--part", "thm41ii", "--n", "0"}).code == 0);
  CHECK(run({"verify", "nosuch"}).code == 2);

  const Run t = run({"verify", "x2y", "--n", "1"});
  CHECK(t.out.rfind("pass  x2y", 0) == 0);
}

TEST_CASE("verify all in JSON") {
  const Run r = run({"verify", "all", "--cutoff", "20000", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() > 30);
  for (const auto& rep : j) CHECK(rep["status"] != "fail");
}
