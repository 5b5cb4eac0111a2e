#include "ssb/sparse.hpp"

#include <algorithm>
#include <cassert>

namespace ssb {

SparseVec SparseVec::unit(std::size_t index, const Scalar& coeff) {
  SparseVec v;
  if (!coeff.is_zero()) v.entries_.emplace_back(index, coeff);
  return v;
}

Scalar SparseVec::at(std::size_t index, std::uint32_t ch) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Scalar(0, ch);
}

void SparseVec::push_back(std::size_t index, Scalar coeff) {
  assert(entries_.empty() || entries_.back().first < index);
  if (!coeff.is_zero()) entries_.emplace_back(index, std::move(coeff));
}

void SparseVec::add_scaled(const SparseVec& other, const Scalar& c) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      Scalar s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVec SparseVec::shifted(std::size_t offset) const {
  SparseVec out = *this;
  for (auto& e : out.entries_) e.first += offset;
  return out;
}

bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  if (!b.is_zero()) out.add_scaled(b, Scalar(1, b.leading_coeff().characteristic()));
  return out;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  if (!b.is_zero()) out.add_scaled(b, Scalar(-1, b.leading_coeff().characteristic()));
  return out;
}

void SparseAccumulator::add(std::size_t index, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(index, coeff);
  if (!inserted) it->second += coeff;
}

void SparseAccumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) add(i, x * c);
}

SparseVec SparseAccumulator::take() {
  std::vector<SparseVec::Entry> items;
  items.reserve(acc_.size());
  for (auto& [i, x] : acc_) {
    if (!x.is_zero()) items.emplace_back(i, std::move(x));
  }
  acc_.clear();
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, x] : items) out.push_back(i, std::move(x));
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  if (rows_.empty()) return v;
  std::size_t pos = 0;
  while (true) {
    const auto& es = v.entries();
    auto it = std::lower_bound(es.begin(), es.end(), pos,
                               [](const SparseVec::Entry& e, std::size_t i) { return e.first < i; });
    const SparseVec* row = nullptr;
    Scalar coeff;
    for (; it != es.end(); ++it) {
      auto p = pivot_row_.find(it->first);
      if (p != pivot_row_.end()) {
        row = &rows_[p->second];
        coeff = -it->second;
        pos = it->first + 1;
        break;
      }
    }
    if (row == nullptr) break;
    v.add_scaled(*row, coeff);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  v.scale(v.leading_coeff().inverse());
  pivot_row_.emplace(v.leading_index(), rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVec> kernel_of_images(std::span<const SparseVec> images, std::size_t image_dim,
                                        std::uint32_t ch) {
  Echelon ech(ch);
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVec v = images[i];
    v.push_back(image_dim + i, Scalar(1, ch));
    v = ech.reduce(std::move(v));
    if (v.leading_index() >= image_dim) {
      // image part vanished: the tag columns record a kernel relation
      SparseVec k;
      for (const auto& [j, x] : v) k.push_back(j - image_dim, x);
      kernel.push_back(std::move(k));
    } else {
      ech.insert(std::move(v));
    }
  }
  return kernel;
}

std::size_t rank_of(std::span<const SparseVec> vectors, std::uint32_t ch) {
  Echelon ech(ch);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

Subspace Subspace::span(std::size_t ambient, std::uint32_t ch, std::span<const SparseVec> vectors) {
  Subspace s(ambient, ch);
  for (const auto& v : vectors) s.add(v);
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(),
                     [&](const SparseVec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace out = *this;
  for (const auto& v : other.basis()) out.add(v);
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = sum a_i u_i = sum b_j w_j  <=>  (a, b) in ker [u | -w]
  const auto ch = characteristic();
  std::vector<SparseVec> images;
  for (const auto& u : basis()) images.push_back(u);
  for (const auto& w : other.basis()) {
    SparseVec neg = w;
    neg.scale(Scalar(-1, ch));
    images.push_back(std::move(neg));
  }
  Subspace out(ambient_, ch);
  for (const auto& k : kernel_of_images(images, ambient_, ch)) {
    SparseAccumulator acc(ch);
    for (const auto& [i, c] : k) {
      if (i < basis().size()) acc.add(basis()[i], c);
    }
    out.add(acc.take());
  }
  return out;
}

}  // namespace ssb
