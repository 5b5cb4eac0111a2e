#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ssb::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kDoc = "algebra { char = 3 vertices = [1] arrows = [x: 1 -> 1] relations = [x*x*x] }";

}  // namespace

TEST_CASE("invariants as JSON") {
  auto r = run({"invariants", "gamma(2,3,1)", "--char", "0", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  for (const char* key : {"spec", "char", "dimension", "cartan", "cartan_invariants", "cartan_det", "centre_dim", "hh"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["cartan_invariants"] == json::array({1, 1, 2, 2}));
  CHECK_FALSE(j.contains("kulshammer"));

  auto k = run({"invariants", "gamma(2,2,3)", "--char", "2", "--json"});
  REQUIRE(k.code == 0);
  CHECK(json::parse(k.out)["kulshammer"]["commutator_dim"] == 44);

  auto t = run({"invariants", kDoc});
  CHECK(t.code == 0);
  CHECK(t.out.find("dimension: 3") != std::string::npos);
  CHECK(t.out.find("spec: custom") != std::string::npos);
}

TEST_CASE("classify") {
  auto r = run({"classify", "derived", "gamma(1,1,1)", "lambda(1,1,2,2)", "--char", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("inequivalent") != std::string::npos);
  CHECK(r.out.find("separator: dim HH^1 8 vs 5") != std::string::npos);

  auto j = run({"classify", "derived", "gamma(1,1,1)", "lambda(1,1,2,2)", "--char", "2", "--json", "--audit"});
  REQUIRE(j.code == 0);
  const auto v = json::parse(j.out);
  CHECK(v["verdict"] == "inequivalent");
  CHECK(v["separator"]["left"] == 8);
  CHECK(v["separator"]["right"] == 5);
  CHECK(v["audit"]["ok"] == true);

  auto e = run({"classify", "stable", "lambda(1,4,2,3)", "lambda(2,3,3,2)"});
  CHECK(e.code == 0);
  CHECK(e.out.find("\nequivalent") != std::string::npos);

  auto h = run({"classify", "derived", "gamma(2,2,3)", "lambda(2,2,2,2)", "--char", "2"});
  CHECK(h.code == 0);
  CHECK(h.out.find("cited [H]") != std::string::npos);
}

TEST_CASE("build, hh and dot") {
  auto b = run({"build", "gamma(2,3,2)"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("dimension: 53") != std::string::npos);
  CHECK(b.out.find("non-uniserial projectives: 1") != std::string::npos);

  auto e = run({"build", "lambda(1,1,2,2)", "--emit"});
  REQUIRE(e.code == 0);
  CHECK(run({"build", e.out, "--json"}).code == 0);

  auto d = run({"build", "gamma(2,3,1)", "--dot"});
  CHECK(d.out.rfind("digraph", 0) == 0);

  auto h = run({"hh", "gamma(3,3,1)", "--max-degree", "4", "--json"});
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["hh"].size() == 5);

  auto hc = run({"hh", "gamma(2,3,1)", "--max-degree", "2"});
  CHECK(hc.out.find("dim HH^2 = 2") != std::string::npos);

  CHECK(run({"build", "gamma(2,2,1)", "--len-bound", "64"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", "derived", "gamma(1,1,1)"}).code == 2);
  CHECK(run({"classify", "sideways", "gamma(1,1,1)", "gamma(1,1,1)"}).code == 2);
  CHECK(run({"invariants", "gamma(1,2"}).code == 2);
  CHECK(run({"invariants", "gamma(0,2,1)"}).code == 2);
  CHECK(run({"invariants", "algebra { char = 4 vertices = [1] arrows = [] }"}).code == 2);
  CHECK(run({"invariants", "/no/such/file"}).code == 2);
  CHECK(run({"classify", "derived", kDoc, "gamma(1,1,1)"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  // computation errors
  auto u = run({"hh", "lambda(1,2,2,2)", "--max-degree", "3"});
  CHECK(u.code == 1);
  CHECK(u.err.find("UnsupportedDegree") != std::string::npos);
  auto inf = run({"build", "algebra { vertices = [1] arrows = [x: 1 -> 1, y: 1 -> 1] relations = [x*y - y*x] }"});
  CHECK(inf.code == 1);
}

TEST_CASE("verify paper-suite") {
  auto r = run({"verify", "paper-suite", "--max", "2", "--chars", "0,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("criterion 9") != std::string::npos);
  CHECK(run({"verify", "other-suite"}).code == 2);
}
