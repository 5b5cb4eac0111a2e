#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ssb/scalar.hpp"

namespace ssb {

/// Sparse coordinate vector; entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::size_t index, const Scalar& coeff);

  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::size_t leading_index() const { return entries_.front().first; }
  const Scalar& leading_coeff() const { return entries_.front().second; }

  /// Coefficient at `index` (zero in characteristic `ch` when absent).
  Scalar at(std::size_t index, std::uint32_t ch) const;

  /// Appends an entry; indices must be pushed in strictly increasing order.
  void push_back(std::size_t index, Scalar coeff);

  /// this += c * other
  void add_scaled(const SparseVec& other, const Scalar& c);
  void scale(const Scalar& c);

  SparseVec shifted(std::size_t offset) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);

 private:
  std::vector<Entry> entries_;
};

/// Accumulates (index, coeff) contributions in any order, then emits a SparseVec.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::uint32_t ch) : ch_(ch) {}
  void add(std::size_t index, const Scalar& coeff);
  void add(const SparseVec& v, const Scalar& c);
  SparseVec take();

 private:
  std::uint32_t ch_;
  std::unordered_map<std::size_t, Scalar> acc_;
};

/// Incremental row echelon form over a prime field (or Q). Every stored row
/// is monic at its pivot and has no entries at columns pivoted earlier in
/// insertion order before the pivot; `reduce` returns the canonical
/// representative of a vector modulo the span (no entries at pivot columns).
class Echelon {
 public:
  explicit Echelon(std::uint32_t ch) : ch_(ch) {}

  std::uint32_t characteristic() const noexcept { return ch_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  bool has_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }

  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  /// Returns true when `v` enlarged the span.
  bool insert(SparseVec v);

 private:
  std::uint32_t ch_;
  std::vector<SparseVec> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

/// Basis of the null space of the linear map whose value on the i-th input
/// basis vector is images[i] (coordinates < image_dim).
std::vector<SparseVec> kernel_of_images(std::span<const SparseVec> images, std::size_t image_dim,
                                        std::uint32_t ch);

/// Rank of the span of the given vectors.
std::size_t rank_of(std::span<const SparseVec> vectors, std::uint32_t ch);

/// Subspace of K^ambient stored by an echelon basis.
class Subspace {
 public:
  Subspace(std::size_t ambient, std::uint32_t ch) : ambient_(ambient), echelon_(ch) {}
  static Subspace span(std::size_t ambient, std::uint32_t ch, std::span<const SparseVec> vectors);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return echelon_.rank(); }
  std::uint32_t characteristic() const noexcept { return echelon_.characteristic(); }
  const std::vector<SparseVec>& basis() const noexcept { return echelon_.rows(); }
  const Echelon& echelon() const noexcept { return echelon_; }

  bool add(const SparseVec& v) { return echelon_.insert(v); }
  bool contains(const SparseVec& v) const { return echelon_.contains(v); }
  bool contains(const Subspace& other) const;
  SparseVec reduce(const SparseVec& v) const { return echelon_.reduce(v); }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  std::size_t ambient_;
  Echelon echelon_;
};

}  // namespace ssb
