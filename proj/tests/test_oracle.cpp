#include "doctest.h"
#include "ssb/errors.hpp"
#include "ssb/families.hpp"
#include "ssb/hochschild.hpp"
#include "ssb/invariants.hpp"
#include "ssb/oracle.hpp"

using namespace ssb;

namespace {

Presentation dual_numbers(std::uint32_t ch) {
  Presentation pres;
  pres.quiver.vertices = {"1"};
  pres.quiver.arrows = {Arrow{"x", 0, 0}};
  pres.characteristic = ch;
  pres.relations = {{Term{1, Path{0, 0, Word(2, char16_t{0})}}}};
  return pres;
}

Presentation two_points() {
  Presentation pres;
  pres.quiver.vertices = {"1", "2"};
  return pres;
}

}  // namespace

TEST_CASE("brute dimensions") {
  CHECK(brute_basis(lambda(1, 1, 2, 2)).dim() == 4);
  CHECK(brute_basis(gamma(2, 2, 1)).dim() == 18);
  CHECK(brute_basis(nakayama(3, 2)).dim() == 21);
  CHECK(brute_basis(dual_numbers(0)).dim() == 2);
  CHECK(brute_basis(two_points()).dim() == 2);
}

TEST_CASE("brute basis matches the engine") {
  for (std::uint32_t ch : {0u, 2u}) {
    for (auto pres : {gamma(1, 2, 2, ch), gamma(2, 3, 1, ch), lambda(2, 3, 2, 3, ch), lambda(1, 3, 2, 4, ch),
                      nakayama(2, 3, ch)}) {
      auto A = FiniteAlgebra::build(pres);
      auto B = brute_basis(pres);
      CHECK(B.basis == A.basis());
      CHECK(brute_associative(B));
      CHECK(brute_centre_dim(B) == centre(A).dim());
      for (std::size_t i = 0; i < B.dim(); ++i) {
        for (std::size_t j = 0; j < B.dim(); ++j) CHECK(B.product(i, j) == A.product(i, j));
      }
    }
  }
}

TEST_CASE("infinite presentations are refused") {
  Presentation pres = dual_numbers(0);
  pres.relations.clear();
  try {
    brute_basis(pres, 12);
    FAIL("expected NotFiniteDimensional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteDimensional);
  }
}

TEST_CASE("HH^1 from derivations") {
  CHECK(hh1_derivations(lambda(1, 2, 2, 2, 3)) == 3);
  CHECK(hh1_derivations(gamma(2, 2, 1)) == 2);
  CHECK(hh1_derivations(gamma(1, 1, 1, 2)) == 8);
  CHECK(hh1_derivations(two_points()) == 0);
  // K[x]/(x^2): derivations x -> x, and x -> 1 in char 2
  CHECK(hh1_derivations(dual_numbers(0)) == 1);
  CHECK(hh1_derivations(dual_numbers(2)) == 2);
  CHECK_THROWS_AS(hh1_derivations(gamma(3, 4, 1), 20), Error);
}

TEST_CASE("HH^2 from the reduced bar complex") {
  CHECK(hh2_reduced_bar(two_points()) == 0);
  for (std::uint32_t ch : {0u, 2u, 3u}) {
    for (auto pres : {gamma(3, 3, 1, ch), gamma(3, 4, 1, ch), gamma(2, 2, 1, ch)}) {
      auto A = FiniteAlgebra::build(pres);
      CHECK(hh2_reduced_bar(pres) == hh_dim(A, 2));
    }
  }
  // K[x]/(x^2): HH^2 is one-dimensional in char 0 and two-dimensional in char 2
  CHECK(hh2_reduced_bar(dual_numbers(0)) == 1);
  CHECK(hh2_reduced_bar(dual_numbers(2)) == 2);
}
