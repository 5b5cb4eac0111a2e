#include "ssb/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "ssb/scalar.hpp"
#include "ssb/sparse.hpp"

namespace ssb {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

std::vector<mpz_class> smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows, m.cols);
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // pivot: smallest nonzero |entry| in the trailing block, first in (row, col) order
      bool found = false;
      std::size_t pr = t, pc = t;
      mpz_class best;
      for (std::size_t i = t; i < m.rows; ++i) {
        for (std::size_t j = t; j < m.cols; ++j) {
          if (sgn(m(i, j)) == 0) continue;
          mpz_class a = abs(m(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) {
        for (std::size_t k = t; k < n; ++k) diag.emplace_back(0);
        return diag;
      }
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
      const mpz_class piv = m(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t j = t; j < m.cols; ++j) m(i, j) -= q * m(t, j);
        if (sgn(m(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t i = t; i < m.rows; ++i) m(i, j) -= q * m(i, t);
        if (sgn(m(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block; otherwise fold a row in
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows && divides; ++i) {
        for (std::size_t j = t + 1; j < m.cols; ++j) {
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), piv.get_mpz_t())) {
            for (std::size_t k = t; k < m.cols; ++k) m(t, k) += m(i, k);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      diag.push_back(abs(piv));
      break;
    }
  }
  return diag;
}

mpz_class bareiss_det(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_in_characteristic(const IntMatrix& m, std::uint32_t ch) {
  Echelon ech(ch);
  for (std::size_t i = 0; i < m.rows; ++i) {
    SparseVec row;
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(j, Scalar(mpq_class(m(i, j)), ch));
    ech.insert(std::move(row));
  }
  return ech.rank();
}

}  // namespace ssb
