#include "doctest.h"
#include "ssb/dsl.hpp"
#include "ssb/errors.hpp"
#include "ssb/families.hpp"

using namespace ssb;

namespace {

const char* kGamma111 = R"(# two commuting loops, squares zero
algebra { char = 0
  vertices = [1]
  arrows = [ a1: 1 -> 1, b1: 1 -> 1 ]
  relations = [ a1*a1, b1*b1, a1*b1 - b1*a1 ]
}
)";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return ErrorKind::InvalidParams;
}

std::string doc(const std::string& body) { return "algebra {\n" + body + "\n}\n"; }

}  // namespace

TEST_CASE("parsing a small presentation") {
  const auto pres = parse_presentation(kGamma111);
  CHECK(pres.quiver.num_vertices() == 1);
  CHECK(pres.quiver.num_arrows() == 2);
  REQUIRE(pres.relations.size() == 3);
  CHECK(pres.relations[2].size() == 2);
  CHECK(pres.relations[2][1].coeff == -1);
  CHECK(FiniteAlgebra::build(pres).dim() == 4);
  // same relations as the family, so the same algebra
  const auto fam = gamma(1, 1, 1);
  CHECK(same_presentation(pres, fam));

  const auto q = parse_presentation(doc("char = 5; vertices = [x, y]; arrows = [u: x -> y, v: y -> x,]\n"
                                        "relations = [ -3/2*u*v*u, v*u*v ]"));
  CHECK(q.characteristic == 5);
  CHECK(q.relations[0][0].coeff == mpq_class(-3, 2));
  CHECK(q.relations.size() == 2);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_presentation(doc("char = 4\nvertices = [1]\narrows = []"));
    FAIL("char 4 accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  try {
    parse_presentation("algebra {\n  vertices = [1] ?\n}");
    FAIL("stray character accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
  }
  try {
    parse_presentation("algebra { vertices = [α] arrows = [ β: α -> α ] relations = [ β*β β ] }");
    FAIL("missing comma accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 67);  // code points, not bytes
  }
  CHECK(kind_of("algebra { vertices = [1] arrows = [] ") == ErrorKind::ParseError);
  CHECK(kind_of(doc("vertices = [1] arrows = [] colour = 3")) == ErrorKind::ParseError);
  CHECK(kind_of(doc("vertices = [1] vertices = [2] arrows = []")) == ErrorKind::ParseError);
  CHECK(kind_of(doc("arrows = []")) == ErrorKind::ParseError);
  CHECK(kind_of(doc("vertices = [1] arrows = [1a: 1 -> 1]")) == ErrorKind::ParseError);
  CHECK(kind_of(doc("vertices = [1] arrows = [a: 1 -> 1] relations = [1/0*a*a]")) == ErrorKind::ParseError);
  CHECK(kind_of(doc("char = x vertices = [1] arrows = []")) == ErrorKind::ParseError);
}

TEST_CASE("validation errors") {
  // a*b runs 1 -> 1, b*a*c runs 2 -> 2
  CHECK(kind_of(doc("vertices = [1, 2]\narrows = [a: 1 -> 2, b: 2 -> 1, c: 2 -> 2]\n"
                    "relations = [ a*b - b*a*c ]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1, 2, 3] arrows = [a: 1 -> 2, b: 2 -> 1]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1] arrows = [a: 1 -> 2]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1] arrows = [a: 1 -> 1] relations = [a*z]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1, 2] arrows = [a: 1 -> 2, b: 2 -> 1] relations = [a*a]")) ==
        ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1] arrows = [a: 1 -> 1] relations = [a]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1, 1] arrows = [a: 1 -> 1]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("vertices = [1] arrows = [a: 1 -> 1, a: 1 -> 1]")) == ErrorKind::ValidationError);
  CHECK(kind_of(doc("char = 3 vertices = [1] arrows = [a: 1 -> 1] relations = [1/3*a*a]")) ==
        ErrorKind::ValidationError);
}

TEST_CASE("emit and parse round trip") {
  for (const auto& pres : {gamma(2, 3, 2), gamma(1, 2, 1, 3), lambda(2, 3, 2, 3, 2), lambda(1, 1, 2, 2),
                           nakayama(3, 2, 5), parse_presentation(kGamma111)}) {
    const auto text = emit_presentation(pres);
    CAPTURE(text);
    const auto back = parse_presentation(text);
    CHECK(same_presentation(pres, back));
    CHECK(emit_presentation(back) == text);
  }
  const auto q = parse_presentation(doc("vertices = [1] arrows = [x: 1 -> 1, y: 1 -> 1]\n"
                                        "relations = [ 2/3*x*y - 5*y*x + x*x*x, -y*y ]"));
  CHECK(same_presentation(parse_presentation(emit_presentation(q)), q));
}

TEST_CASE("sources") {
  CHECK(load_source("gamma(2,3,1)").family == FamilySpec::gamma(2, 3, 1));
  CHECK(load_source("lambda(1,3,2,2)", 2).characteristic == 2);
  CHECK(load_source(kGamma111, 3).characteristic == 3);
  CHECK(load_source(kGamma111).characteristic == 0);
  try {
    load_source("/nonexistent/file.ssb");
    FAIL("missing file accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  CHECK_THROWS_AS(load_source("gamma(0,1,1)"), Error);
}

TEST_CASE("invariants report") {
  const auto j = invariants_report(FiniteAlgebra::build(gamma(2, 3, 1)));
  CHECK(j["spec"] == "gamma(2,3,1)");
  CHECK(j["char"] == 0);
  CHECK(j["dimension"] == 28);
  // r(p+q-2) = 3 is odd
  CHECK(j["cartan_invariants"] == nlohmann::json::array({1, 1, 2, 2}));
  CHECK(j["cartan_det"] == 4);
  CHECK(j["cartan"].size() == 4);
  CHECK(j["centre_dim"] == 5);
  CHECK(j["hh"]["1"] == 2);
  CHECK_FALSE(j["hh"].contains("2"));
  CHECK_FALSE(j.contains("kulshammer"));

  CHECK(invariants_report(FiniteAlgebra::build(gamma(2, 4, 1)), {-1, false})["cartan_invariants"] ==
        nlohmann::json::array({1, 1, 1, 1, 4}));

  const auto k = invariants_report(FiniteAlgebra::build(gamma(2, 2, 3, 2)), {-1, true});
  CHECK_FALSE(k.contains("hh"));
  CHECK(k["kulshammer"]["commutator_dim"] == 44);
  CHECK(k["kulshammer"]["quotient_profile"][0] == 1);

  const auto h = invariants_report(FiniteAlgebra::build(gamma(2, 3, 1)), {5, false});
  CHECK(h["hh"].size() == 4);  // degrees 0..2p-1
  CHECK(h["hh"]["2"] == 2);

  // a non-symmetric algebra has no Külshammer data
  const auto a2 = parse_presentation(doc("char = 2 vertices = [1, 2] arrows = [a: 1 -> 2]"));
  CHECK_FALSE(invariants_report(FiniteAlgebra::build(a2)).contains("kulshammer"));
}

TEST_CASE("dot export") {
  const auto dot = to_dot(gamma(2, 3, 1));
  for (const char* v : {"\"1\"", "\"2\"", "\"3\"", "\"4\""}) CHECK(dot.find(v) != std::string::npos);
  CHECK(dot.find("\"5\"") == std::string::npos);
  CHECK(dot.find("[label=\"b3\"]") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}
