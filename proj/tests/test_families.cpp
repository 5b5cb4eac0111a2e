#include "doctest.h"
#include "ssb/errors.hpp"
#include "ssb/families.hpp"

using namespace ssb;

namespace {

std::size_t nonuniserial(const FiniteAlgebra& A) {
  std::size_t n = 0;
  for (const auto& info : A.projective_structure()) n += info.uniserial ? 0 : 1;
  return n;
}

}  // namespace

TEST_CASE("family spec syntax") {
  auto g = parse_family_spec(" Gamma( 2 , 3,1 ) ");
  CHECK(g == FamilySpec::gamma(2, 3, 1));
  CHECK(g.str() == "gamma(2,3,1)");
  CHECK(parse_family_spec("NAKAYAMA(3,2)") == FamilySpec::nakayama(3, 2));
  CHECK(parse_family_spec("lambda(3,2,4,5)").swapped);
  CHECK(parse_family_spec("lambda(3,2,4,5)") == FamilySpec::lambda(2, 3, 5, 4));
  CHECK(FamilySpec::lambda(2, 2, 3, 2) == FamilySpec::lambda(2, 2, 2, 3));
  CHECK(FamilySpec::gamma(3, 2, 1) == FamilySpec::gamma(2, 3, 1));
  CHECK(looks_like_family_spec("gamma(1,1,1)"));
  CHECK_FALSE(looks_like_family_spec("algebra.ssb"));

  for (const char* bad : {"gamma(1,2)", "gamma(1,2,3", "delta(1,2,3)", "gamma(a,2,3)"}) {
    try {
      parse_family_spec(bad);
      FAIL(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  for (const char* bad : {"gamma(0,2,3)", "lambda(1,2,1,3)", "lambda(1,1,2,1)", "nakayama(0,1)"}) {
    try {
      parse_family_spec(bad);
      FAIL(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidParams);
    }
  }
}

TEST_CASE("projective structure") {
  auto A = FiniteAlgebra::build(gamma(2, 3, 1));
  const auto info = A.projective_structure();
  CHECK(nonuniserial(A) == 1);
  CHECK_FALSE(info[0].uniserial);
  std::size_t total = 0;
  for (const auto& pi : info) {
    for (auto d : pi.radical_layers) total += d;
  }
  CHECK(total == A.dim());

  auto N = FiniteAlgebra::build(nakayama(2, 2));
  CHECK(nonuniserial(N) == 0);
  for (const auto& pi : N.projective_structure()) {
    CHECK(pi.uniserial);
    CHECK(pi.radical_layers.size() == 5);
  }
  CHECK(nonuniserial(FiniteAlgebra::build(nakayama(2, 3))) == 0);
  CHECK(nonuniserial(FiniteAlgebra::build(lambda(2, 2, 2, 2))) == 1);
}

TEST_CASE("structure checks on the grid") {
  for (std::uint32_t ch : {0u, 2u}) {
    for (int p = 1; p <= 3; ++p) {
      for (int q = p; q <= 3; ++q) {
        for (int r = 1; r <= 2; ++r) {
          auto rep = validate_structure(FiniteAlgebra::build(gamma(p, q, r, ch)));
          CAPTURE(p);
          CAPTURE(q);
          CHECK(rep.all_ok());
          CHECK(rep.nonuniserial_count == 1);
        }
        for (int s = 1; s <= 3; ++s) {
          for (int t = 1; t <= 3; ++t) {
            if ((p == 1 && s < 2) || (q == 1 && t < 2)) continue;
            auto rep = validate_structure(FiniteAlgebra::build(lambda(p, q, s, t, ch)));
            CHECK(rep.all_ok());
            CHECK(rep.nonuniserial_count == 1);
          }
        }
      }
    }
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 2; ++m) {
        auto rep = validate_structure(FiniteAlgebra::build(nakayama(n, m, ch)));
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(rep.special_biserial);
        CAPTURE(rep.weakly_symmetric);
        CAPTURE(rep.symmetric_form_ok);
        CAPTURE(rep.arrow_degrees_ok);
        CHECK(rep.all_ok());
        CHECK(rep.nonuniserial_count == 0);
      }
    }
  }
}

TEST_CASE("a truncated polynomial ring") {
  Presentation pres;
  pres.quiver.vertices = {"1"};
  pres.quiver.arrows = {Arrow{"x", 0, 0}};
  pres.relations = {{Term{1, Path{0, 0, Word(3, char16_t{0})}}}};
  auto A = FiniteAlgebra::build(pres);
  CHECK(A.dim() == 3);
  auto rep = validate_structure(A);
  CHECK(rep.special_biserial);
  CHECK(rep.arrow_degrees_ok);
  CHECK(rep.weakly_symmetric);
  CHECK(rep.nonuniserial_count == 0);
}

TEST_CASE("a non-symmetric algebra fails the form check") {
  Presentation pres;
  pres.quiver.vertices = {"1", "2"};
  pres.quiver.arrows = {Arrow{"a", 0, 1}};
  auto rep = validate_structure(FiniteAlgebra::build(pres));
  CHECK(rep.special_biserial);
  CHECK_FALSE(rep.weakly_symmetric);
  CHECK_FALSE(rep.symmetric_form_ok);
}

TEST_CASE("the extra socle relations are superfluous") {
  for (auto [p, q, r] : {std::tuple{1, 2, 1}, {2, 3, 2}, {3, 3, 1}, {2, 4, 3}}) {
    auto A = FiniteAlgebra::build(gamma(p, q, r));
    auto B = FiniteAlgebra::build(gamma(p, q, r, 0, true));
    CHECK(A.basis() == B.basis());
    for (std::size_t i = 0; i < A.dim(); ++i) {
      for (std::size_t j = 0; j < A.dim(); ++j) CHECK(A.product(i, j) == B.product(i, j));
    }
  }
}

TEST_CASE("family dimensions") {
  CHECK(family_dimension(FamilySpec::nakayama(1, 1)) == 2);
  CHECK(family_dimension(FamilySpec::nakayama(3, 1)) == 12);
  CHECK(family_dimension(FamilySpec::gamma(2, 2, 1)) == 18);
}
