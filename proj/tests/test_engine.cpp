#include <random>

#include "doctest.h"
#include "ssb/algebra.hpp"
#include "ssb/errors.hpp"
#include "ssb/families.hpp"

using namespace ssb;

namespace {

Word word(const Quiver& q, std::initializer_list<const char*> names) {
  Word w;
  for (const char* n : names) w += static_cast<char16_t>(*q.find_arrow(n));
  return w;
}

}  // namespace

TEST_CASE("small family dimensions") {
  auto L = FiniteAlgebra::build(lambda(1, 1, 2, 2));
  CHECK(L.dim() == 4);
  auto G = FiniteAlgebra::build(gamma(1, 1, 1));
  CHECK(G.dim() == 4);
  CHECK(FiniteAlgebra::build(gamma(2, 2, 1)).dim() == 18);
  CHECK(FiniteAlgebra::build(nakayama(1, 1)).dim() == 2);
  CHECK(FiniteAlgebra::build(nakayama(3, 1)).dim() == 12);
  CHECK(FiniteAlgebra::build(lambda(2, 3, 2, 3)).dim() == 38);
}

TEST_CASE("products in the smallest algebras") {
  auto G = FiniteAlgebra::build(gamma(1, 1, 1));
  const auto& q = G.quiver();
  CHECK(G.element(word(q, {"b1", "a1"})) == G.element(word(q, {"a1", "b1"})));
  CHECK_FALSE(G.element(word(q, {"a1", "b1"})).is_zero());
  auto L = FiniteAlgebra::build(lambda(1, 1, 2, 2));
  CHECK(L.element(word(L.quiver(), {"a1", "b1"})).is_zero());
  auto x = L.basis_vector(2);
  CHECK(L.multiply(L.one(), x) == x);
  CHECK(L.multiply(x, L.one()) == x);
}

TEST_CASE("dimension formulas on the grid") {
  for (int p = 1; p <= 4; ++p) {
    for (int q = p; q <= 4; ++q) {
      for (int r = 1; r <= 3; ++r) {
        auto spec = FamilySpec::gamma(p, q, r);
        CHECK(FiniteAlgebra::build(presentation(spec)).dim() == family_dimension(spec));
      }
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
          FamilySpec spec;
          try {
            spec = FamilySpec::lambda(p, q, s, t);
          } catch (const Error&) {
            continue;
          }
          CHECK(FiniteAlgebra::build(presentation(spec)).dim() == family_dimension(spec));
        }
      }
    }
  }
}
