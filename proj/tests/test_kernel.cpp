#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ssb/errors.hpp"
#include "ssb/matrix.hpp"
#include "ssb/scalar.hpp"
#include "ssb/sparse.hpp"

using namespace ssb;

namespace {

SparseVec vec(std::initializer_list<long> xs, std::uint32_t ch = 0) {
  SparseVec v;
  std::size_t i = 0;
  for (long x : xs) v.push_back(i++, Scalar(x, ch));
  return v;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  Scalar a(3, 7), b(5, 7);
  CHECK((a * b).residue() == 1);
  CHECK((a / b * b) == a);
  CHECK((-a + a).is_zero());
  CHECK(Scalar(2, 5).pow(4).is_one());
  CHECK(Scalar(mpq_class(1, 3)) * Scalar(3) == Scalar(1));
  CHECK(Scalar(mpq_class(1, 2), 3).residue() == 2);
  CHECK_THROWS_AS(Scalar(mpq_class(1, 3), 3), Error);
  CHECK_THROWS_AS(check_characteristic(4), Error);
  CHECK_NOTHROW(check_characteristic(2147483647));
  CHECK_THROWS_AS(Scalar(0, 5).inverse(), std::domain_error);
}

TEST_CASE("echelon reduce is canonical") {
  Echelon e(0);
  e.insert(vec({1, 1, 0}));
  e.insert(vec({0, 1, 1}));
  CHECK(e.rank() == 2);
  CHECK(e.contains(vec({1, 2, 1})));
  CHECK_FALSE(e.contains(vec({0, 0, 1})));
  // x and x + span element reduce to the same representative
  auto r1 = e.reduce(vec({0, 0, 1}));
  auto r2 = e.reduce(vec({1, 1, 1}));
  CHECK(r1 == r2);
}

TEST_CASE("kernel of images") {
  // images of e0, e1, e2: (1,0), (0,1), (1,1)
  std::vector<SparseVec> im{vec({1, 0}), vec({0, 1}), vec({1, 1})};
  auto k = kernel_of_images(im, 2, 0);
  REQUIRE(k.size() == 1);
  // verify it is a relation
  SparseAccumulator acc(0);
  for (auto& [i, c] : k[0]) acc.add(im[i], c);
  CHECK(acc.take().is_zero());
  // over F_2, (1,1)+(1,1) vanishes
  std::vector<SparseVec> im2{vec({1, 1}, 2), vec({1, 1}, 2)};
  CHECK(kernel_of_images(im2, 2, 2).size() == 1);
}

TEST_CASE("subspace sum and intersection") {
  auto u = Subspace::span(3, 0, std::vector{vec({1, 0, 0}), vec({0, 1, 0})});
  auto w = Subspace::span(3, 0, std::vector{vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(u.sum(w).dim() == 3);
  auto i = u.intersect(w);
  CHECK(i.dim() == 1);
  CHECK(i.contains(vec({0, 5, 0})));
  CHECK(u.contains(i));
}

TEST_CASE("smith normal form") {
  auto snf = [](std::vector<std::vector<long>> rows) {
    return smith_normal_form(IntMatrix::from_rows(rows));
  };
  CHECK(snf({{4, 2}, {2, 2}}) == std::vector<mpz_class>{2, 2});
  CHECK(snf({{4, 2}, {2, 3}}) == std::vector<mpz_class>{1, 8});
  CHECK(snf({{2, 0}, {0, 3}}) == std::vector<mpz_class>{1, 6});
  CHECK(snf({{0, 0}, {0, 0}}) == std::vector<mpz_class>{0, 0});
  CHECK(snf({{6, 4, 2}}) == std::vector<mpz_class>{2});
  CHECK(snf({{1, 2}, {2, 4}}) == std::vector<mpz_class>{1, 0});
}

TEST_CASE("smith normal form against determinant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    for (auto& x : m.data) x = dist(rng);
    auto d = smith_normal_form(m);
    mpz_class prod = 1;
    for (auto& x : d) prod *= x;
    CHECK(prod == abs(bareiss_det(m)));
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] != 0) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    }
    // invariant under a row permutation
    IntMatrix p = m;
    for (std::size_t j = 0; j < n; ++j) std::swap(p(0, j), p(n - 1, j));
    CHECK(smith_normal_form(p) == d);
    // rank over Q equals number of nonzero invariant factors
    auto nz = std::count_if(d.begin(), d.end(), [](const mpz_class& x) { return x != 0; });
    CHECK(rank_in_characteristic(m, 0) == static_cast<std::size_t>(nz));
  }
}

TEST_CASE("rank in prime characteristic") {
  auto m = IntMatrix::from_rows({{4, 2}, {2, 2}});
  CHECK(rank_in_characteristic(m, 2) == 0);
  CHECK(rank_in_characteristic(m, 3) == 2);
  CHECK(bareiss_det(IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})) == 4);
}
