#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace ssb {

/// Dense integer matrix, row major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  mpz_class& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

/// Invariant factors d_1 | d_2 | ... (non-negative), min(rows, cols) of them,
/// zeros last.
std::vector<mpz_class> smith_normal_form(IntMatrix m);

/// Determinant by fraction-free elimination; the matrix must be square.
mpz_class bareiss_det(IntMatrix m);

/// Rank of an integer matrix reduced into characteristic `ch` (0 = over Q).
std::size_t rank_in_characteristic(const IntMatrix& m, std::uint32_t ch);

}  // namespace ssb
