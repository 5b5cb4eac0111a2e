#include "ssb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "ssb/errors.hpp"

namespace ssb {

namespace {

using PathKey = std::pair<std::uint32_t, Word>;  // origin, arrows

struct Truncated {
  std::vector<Path> paths;  // deglex descending: column 0 is the largest path
  std::map<PathKey, std::size_t> column;
  Echelon ideal;
  explicit Truncated(std::uint32_t ch) : ideal(ch) {}
};

std::vector<Path> paths_below(const Quiver& Q, std::size_t N) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::uint32_t v = 0; v < Q.num_vertices(); ++v) layer.push_back(Path::vertex(v));
  for (std::size_t len = 0; len < N && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (std::uint32_t a = 0; a < Q.num_arrows(); ++a) {
        if (Q.arrows[a].origin != p.terminus) continue;
        next.push_back(Path{p.origin, Q.arrows[a].terminus, p.arrows + static_cast<char16_t>(a)});
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return deglex_less(b, a); });
  return out;
}

Truncated close_ideal(const Presentation& pres, std::size_t N) {
  const auto& Q = pres.quiver;
  const auto ch = pres.characteristic;
  Truncated T(ch);
  T.paths = paths_below(Q, N);
  for (std::size_t c = 0; c < T.paths.size(); ++c) T.column[{T.paths[c].origin, T.paths[c].arrows}] = c;

  auto times = [&](const SparseVec& x, std::uint32_t a, bool left) {
    SparseAccumulator acc(ch);
    const auto& arr = Q.arrows[a];
    for (const auto& [c, coeff] : x) {
      const Path& p = T.paths[c];
      if (p.length() + 1 >= N) continue;
      if (left ? arr.terminus != p.origin : p.terminus != arr.origin) continue;
      const Word w = left ? static_cast<char16_t>(a) + p.arrows : p.arrows + static_cast<char16_t>(a);
      acc.add(T.column.at({left ? arr.origin : p.origin, w}), coeff);
    }
    return acc.take();
  };

  std::deque<SparseVec> queue;
  auto offer = [&](SparseVec v) {
    v = T.ideal.reduce(std::move(v));
    if (v.is_zero()) return;
    T.ideal.insert(v);
    queue.push_back(std::move(v));
  };
  for (const auto& rel : pres.relations) {
    SparseAccumulator acc(ch);
    for (const auto& term : rel) {
      if (term.path.length() < N) acc.add(T.column.at({term.path.origin, term.path.arrows}), Scalar(term.coeff, ch));
    }
    offer(acc.take());
  }
  while (!queue.empty()) {
    SparseVec x = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t a = 0; a < Q.num_arrows(); ++a) {
      offer(times(x, a, false));
      offer(times(x, a, true));
    }
  }
  return T;
}

}  // namespace

SparseVec BruteAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseAccumulator acc(characteristic);
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) acc.add(product(i, j), a * b);
  }
  return acc.take();
}

std::size_t BruteAlgebra::vertex_index(std::uint32_t v) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].trivial() && basis[i].origin == v) return i;
  }
  throw Error(ErrorKind::NonAdmissible, "vertex idempotent vanishes");
}

BruteAlgebra brute_basis(const Presentation& pres, std::size_t max_length) {
  std::size_t longest = 1;
  for (const auto& rel : pres.relations) {
    for (const auto& t : rel) longest = std::max(longest, t.path.length());
  }
  std::size_t N = longest + 1;
  Truncated cur = close_ideal(pres, N);
  std::size_t cur_dim = cur.paths.size() - cur.ideal.rank();
  while (true) {
    if (N + 1 > max_length) throw Error(ErrorKind::NotFiniteDimensional, "no stabilization below path length " + std::to_string(max_length));
    Truncated next = close_ideal(pres, N + 1);
    const std::size_t next_dim = next.paths.size() - next.ideal.rank();
    if (next_dim == cur_dim) break;  // J^N lies in I + J^{N+1}, hence in I
    cur = std::move(next);
    cur_dim = next_dim;
    ++N;
  }

  BruteAlgebra B;
  B.quiver = pres.quiver;
  B.relations = pres.relations;
  B.characteristic = pres.characteristic;
  B.truncation = N;
  std::vector<std::size_t> index_of_column(cur.paths.size(), SIZE_MAX);
  for (std::size_t c = cur.paths.size(); c-- > 0;) {
    if (cur.ideal.has_pivot(c)) continue;
    index_of_column[c] = B.basis.size();
    B.basis.push_back(cur.paths[c]);
  }
  const std::size_t n = B.basis.size();
  B.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Path& x = B.basis[i];
      const Path& y = B.basis[j];
      if (x.terminus != y.origin || x.length() + y.length() >= N) continue;
      const SparseVec r = cur.ideal.reduce(
          SparseVec::unit(cur.column.at({x.origin, x.arrows + y.arrows}), Scalar(1, B.characteristic)));
      SparseAccumulator acc(B.characteristic);
      for (const auto& [c, coeff] : r) acc.add(index_of_column[c], coeff);
      B.table[i * n + j] = acc.take();
    }
  }
  return B;
}

std::size_t brute_centre_dim(const BruteAlgebra& B) {
  const std::size_t n = B.dim();
  std::vector<SparseVec> images;
  for (std::size_t k = 0; k < n; ++k) {
    SparseAccumulator acc(B.characteristic);
    for (std::size_t j = 0; j < n; ++j) {
      acc.add(B.product(k, j).shifted(j * n), Scalar(1, B.characteristic));
      acc.add(B.product(j, k).shifted(j * n), Scalar(-1, B.characteristic));
    }
    images.push_back(acc.take());
  }
  return n - rank_of(images, B.characteristic);
}

bool brute_associative(const BruteAlgebra& B) {
  const std::size_t n = B.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec ij = B.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec left = B.multiply(ij, SparseVec::unit(k, Scalar(1, B.characteristic)));
        SparseVec right = B.multiply(SparseVec::unit(i, Scalar(1, B.characteristic)), B.product(j, k));
        if (!(left == right)) return false;
      }
    }
  }
  return true;
}

namespace {

SparseVec arrow_element(const BruteAlgebra& B, std::uint32_t a) {
  for (std::size_t i = 0; i < B.dim(); ++i) {
    if (B.basis[i].length() == 1 && B.basis[i].arrows[0] == a) return SparseVec::unit(i, Scalar(1, B.characteristic));
  }
  throw Error(ErrorKind::NonAdmissible, "arrow lies in the ideal");
}

SparseVec word_element(const BruteAlgebra& B, const Path& p) {
  SparseVec x = SparseVec::unit(B.vertex_index(p.origin), Scalar(1, B.characteristic));
  for (char16_t a : p.arrows) x = B.multiply(x, arrow_element(B, a));
  return x;
}

void check_limit(const BruteAlgebra& B, std::size_t limit) {
  if (B.dim() > limit) {
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(B.dim()) + " above " + std::to_string(limit));
  }
}

}  // namespace

std::size_t hh1_derivations(const Presentation& pres, std::size_t limit) {
  return hh1_derivations(brute_basis(pres), limit);
}

std::size_t hh1_derivations(const BruteAlgebra& B, std::size_t limit) {
  check_limit(B, limit);
  const auto ch = B.characteristic;
  const auto& Q = B.quiver;
  const std::size_t n = B.dim();
  const std::size_t nv = Q.num_vertices();
  const Scalar one(1, ch);

  // unknown generator g: vertices 0..nv-1, then arrows
  std::vector<SparseVec> gen;
  for (std::uint32_t v = 0; v < nv; ++v) gen.push_back(SparseVec::unit(B.vertex_index(v), one));
  for (std::uint32_t a = 0; a < Q.num_arrows(); ++a) gen.push_back(arrow_element(B, a));
  SparseVec unit;
  for (std::uint32_t v = 0; v < nv; ++v) unit = unit + gen[v];

  // each equation: sum of coeff * L * D(g) * R = 0 in A
  struct Piece {
    std::size_t g;
    SparseVec L, R;
    Scalar c;
  };
  std::vector<std::vector<Piece>> equations;
  for (std::uint32_t v = 0; v < nv; ++v) {
    for (std::uint32_t w = 0; w < nv; ++w) {
      std::vector<Piece> eq{{v, unit, gen[w], one}, {w, gen[v], unit, one}};
      if (v == w) eq.push_back({v, unit, unit, -one});
      equations.push_back(std::move(eq));
    }
  }
  for (std::uint32_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t ga = nv + a;
    for (std::uint32_t v = 0; v < nv; ++v) {
      std::vector<Piece> left{{v, unit, gen[ga], one}, {ga, gen[v], unit, one}};
      if (v == Q.arrows[a].origin) left.push_back({ga, unit, unit, -one});
      equations.push_back(std::move(left));
      std::vector<Piece> right{{ga, unit, gen[v], one}, {v, gen[ga], unit, one}};
      if (v == Q.arrows[a].terminus) right.push_back({ga, unit, unit, -one});
      equations.push_back(std::move(right));
    }
  }
  for (const auto& rel : B.relations) {
    std::vector<Piece> eq;
    for (const auto& term : rel) {
      const Word& w = term.path.arrows;
      for (std::size_t k = 0; k < w.size(); ++k) {
        const Path prefix{term.path.origin, k == 0 ? term.path.origin : Q.arrows[w[k - 1]].terminus, w.substr(0, k)};
        const Path suffix{Q.arrows[w[k]].terminus, term.path.terminus, w.substr(k + 1)};
        eq.push_back({nv + w[k], word_element(B, prefix), word_element(B, suffix), Scalar(term.coeff, ch)});
      }
    }
    equations.push_back(std::move(eq));
  }

  // column for the unknown D(g) = basis element b
  std::vector<SparseVec> columns;
  for (std::size_t g = 0; g < gen.size(); ++g) {
    for (std::size_t b = 0; b < n; ++b) {
      const SparseVec x = SparseVec::unit(b, one);
      SparseAccumulator acc(ch);
      for (std::size_t e = 0; e < equations.size(); ++e) {
        for (const auto& piece : equations[e]) {
          if (piece.g != g) continue;
          acc.add(B.multiply(B.multiply(piece.L, x), piece.R).shifted(e * n), piece.c);
        }
      }
      columns.push_back(acc.take());
    }
  }
  const std::size_t derivations = columns.size() - rank_of(columns, ch);
  const std::size_t inner = n - brute_centre_dim(B);
  return derivations - inner;
}

std::size_t hh2_reduced_bar(const Presentation& pres, std::size_t limit) {
  return hh2_reduced_bar(brute_basis(pres), limit);
}

namespace {

// Normalized cochains Hom_{E-E}(r (x)_E ... (x)_E r, A) on tuples of
// composable radical basis paths; coordinates (tuple, basis element of
// e_o A e_t).
class BarComplex {
 public:
  explicit BarComplex(const BruteAlgebra& B) : B_(B) {
    for (std::size_t i = 0; i < B.dim(); ++i) {
      const Path& p = B.basis[i];
      auto& blk = block_[{p.origin, p.terminus}];
      pos_[i] = blk.size();
      blk.push_back(i);
      if (!p.trivial()) radical_.push_back(i);
    }
    for (std::size_t a : radical_) {
      for (std::size_t b : radical_) {
        for (const auto& [x, c] : B.product(a, b)) factorizations_[x].push_back({a, b, c});
      }
    }
  }

  std::vector<std::vector<std::size_t>> tuples(std::size_t n) const {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& t : out) {
        for (std::size_t a : radical_) {
          if (!t.empty() && B_.basis[t.back()].terminus != B_.basis[a].origin) continue;
          auto u = t;
          u.push_back(a);
          next.push_back(std::move(u));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  /// Coboundary images of all basis cochains of degree n, in coordinates of
  /// degree n + 1.
  std::vector<SparseVec> coboundary(std::size_t n) {
    const auto ch = B_.characteristic;
    std::vector<SparseVec> images;
    for (const auto& T : tuples(n)) {
      const auto [o, t] = ends(T);
      for (std::size_t b : block(o, t)) {
        SparseAccumulator acc(ch);
        const SparseVec bv = SparseVec::unit(b, Scalar(1, ch));
        // a_1 f(a_2 ...)
        for (std::size_t a : radical_) {
          if (B_.basis[a].terminus != o) continue;
          auto S = T;
          S.insert(S.begin(), a);
          place(acc, S, B_.multiply(SparseVec::unit(a, Scalar(1, ch)), bv), Scalar(1, ch));
        }
        // (-1)^i f(..., a_i a_{i+1}, ...)
        for (std::size_t i = 0; i < T.size(); ++i) {
          auto it = factorizations_.find(T[i]);
          if (it == factorizations_.end()) continue;
          for (const auto& [x, y, c] : it->second) {
            auto S = T;
            S[i] = y;
            S.insert(S.begin() + static_cast<long>(i), x);
            place(acc, S, bv, (i % 2 == 0 ? Scalar(-1, ch) : Scalar(1, ch)) * c);
          }
        }
        // (-1)^{n+1} f(a_1 ... a_n) a_{n+1}
        for (std::size_t a : radical_) {
          if (B_.basis[a].origin != t) continue;
          auto S = T;
          S.push_back(a);
          place(acc, S, B_.multiply(bv, SparseVec::unit(a, Scalar(1, ch))),
                n % 2 == 0 ? Scalar(-1, ch) : Scalar(1, ch));
        }
        images.push_back(acc.take());
      }
    }
    return images;
  }

  std::size_t cochain_dim(std::size_t n) const {
    std::size_t d = 0;
    for (const auto& T : tuples(n)) {
      const auto [o, t] = ends(T);
      d += block(o, t).size();
    }
    return d;
  }

 private:
  struct Factor {
    std::size_t a, b;
    Scalar c;
  };

  std::pair<std::uint32_t, std::uint32_t> ends(const std::vector<std::size_t>& T) const {
    return {B_.basis[T.front()].origin, B_.basis[T.back()].terminus};
  }

  const std::vector<std::size_t>& block(std::uint32_t o, std::uint32_t t) const {
    static const std::vector<std::size_t> empty;
    auto it = block_.find({o, t});
    return it == block_.end() ? empty : it->second;
  }

  void place(SparseAccumulator& acc, const std::vector<std::size_t>& S, const SparseVec& value, const Scalar& c) {
    if (value.is_zero()) return;
    auto [it, inserted] = offset_.try_emplace(S, next_);
    if (inserted) {
      const auto [o, t] = ends(S);
      next_ += block(o, t).size();
    }
    for (const auto& [k, x] : value) acc.add(it->second + pos_.at(k), x * c);
  }

  const BruteAlgebra& B_;
  std::vector<std::size_t> radical_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::size_t>> block_;
  std::unordered_map<std::size_t, std::size_t> pos_;
  std::unordered_map<std::size_t, std::vector<Factor>> factorizations_;
  std::map<std::vector<std::size_t>, std::size_t> offset_;
  std::size_t next_ = 0;
};

}  // namespace

std::size_t hh2_reduced_bar(const BruteAlgebra& B, std::size_t limit) {
  check_limit(B, limit);
  const auto ch = B.characteristic;
  BarComplex bar(B);
  const std::size_t d2 = bar.cochain_dim(2);
  const std::size_t r2 = rank_of(bar.coboundary(2), ch);
  BarComplex bar1(B);
  const std::size_t r1 = rank_of(bar1.coboundary(1), ch);
  return d2 - r2 - r1;
}

}  // namespace ssb
