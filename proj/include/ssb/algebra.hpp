#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "ssb/quiver.hpp"
#include "ssb/scalar.hpp"
#include "ssb/sparse.hpp"

namespace ssb {

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

/// Linear combination of nontrivial words, leading (largest) term first.
using Poly = std::map<Word, Scalar, WordGreater>;

/// Rewriting rule lhs -> rhs, rhs a combination of deglex-smaller words.
struct Rule {
  Word lhs;
  Poly rhs;
};

/// Reduced rewriting system obtained by completing the relations.
class RewriteSystem {
 public:
  RewriteSystem(std::uint32_t ch, std::size_t length_bound) : ch_(ch), bound_(length_bound) {}

  /// Adds relations and completes; throws NotFiniteDimensional when a rule
  /// longer than the bound is needed.
  void complete(std::vector<Poly> relations);

  /// Normal form of a polynomial. With `rng`, occurrences are rewritten in a
  /// random order instead of leading-term first.
  Poly reduce(Poly p, std::mt19937* rng = nullptr) const;

  bool irreducible(const Word& w) const;
  /// True when some rule's lhs ends at the last letter of w.
  bool reducible_suffix(const Word& w) const;

  std::vector<Rule> rules() const;
  std::size_t length_bound() const { return bound_; }

 private:
  struct Occurrence {
    std::size_t pos;
    std::size_t rule;
  };
  std::optional<Occurrence> find(const Word& w, std::size_t from_len = 0) const;
  std::vector<Occurrence> find_all(const Word& w) const;
  void add_rule(Poly p, std::vector<Poly>& pending);

  std::uint32_t ch_;
  std::size_t bound_;
  std::deque<Rule> rules_;
  std::vector<bool> active_;
  std::unordered_multimap<std::size_t, std::size_t> index_;  // hash(lhs) -> rule
  std::map<std::size_t, std::size_t> lengths_;  // lhs length -> active count
};

struct BuildOptions {
  std::optional<std::size_t> length_bound;  // else default (or SSB_LEN_BOUND)
  bool check_associativity = true;
};

/// Default bound 4 * (max relation length) * (#arrows), at least 16.
std::size_t default_length_bound(const Presentation& pres);

struct ProjectiveInfo {
  std::uint32_t vertex;
  bool uniserial;
  std::vector<std::size_t> radical_layers;  // dim rad^k/rad^{k+1}
};

/// Finite-dimensional quotient of a path algebra with a normal-form path
/// basis. Immutable once built.
class FiniteAlgebra {
 public:
  static FiniteAlgebra build(const Presentation& pres, const BuildOptions& opts = {});

  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  std::uint32_t characteristic() const { return pres_.characteristic; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_vertices() const { return pres_.quiver.num_vertices(); }
  const std::vector<Path>& basis() const { return basis_; }
  const RewriteSystem& rewriting() const { return rs_; }

  std::optional<std::size_t> index_of(const Path& p) const;
  std::size_t vertex_index(std::uint32_t v) const { return vertex_idx_[v]; }
  std::size_t arrow_index(std::uint32_t a) const { return arrow_idx_[a]; }

  /// b_i * b_j in basis coordinates.
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  /// x * (arrow a), cheap right action.
  SparseVec right_arrow(const SparseVec& x, std::uint32_t a) const;
  SparseVec left_arrow(std::uint32_t a, const SparseVec& x) const;

  SparseVec one() const;
  SparseVec basis_vector(std::size_t i) const { return SparseVec::unit(i, Scalar(1, characteristic())); }
  /// Normal form of an arbitrary path (zero if not composable).
  SparseVec element(const Path& p, std::mt19937* rng = nullptr) const;
  SparseVec element(const Word& w, std::mt19937* rng = nullptr) const;
  SparseVec power(const SparseVec& x, std::uint64_t n) const;

  /// Exhaustive check of (xy)z = x(yz) over basis triples.
  bool associative() const;

  std::vector<ProjectiveInfo> projective_structure() const;

  Scalar zero_scalar() const { return Scalar(0, characteristic()); }
  Scalar one_scalar() const { return Scalar(1, characteristic()); }
  std::string element_string(const SparseVec& x) const;

 private:
  FiniteAlgebra(Presentation pres, RewriteSystem rs) : pres_(std::move(pres)), rs_(std::move(rs)) {}
  SparseVec from_poly(const Poly& p) const;

  Presentation pres_;
  RewriteSystem rs_;
  std::vector<Path> basis_;
  std::unordered_map<Word, std::size_t> word_idx_;
  std::vector<std::size_t> vertex_idx_;
  std::vector<std::size_t> arrow_idx_;
  std::vector<SparseVec> table_;
  std::vector<std::vector<SparseVec>> right_action_;  // [arrow][basis]
};

}  // namespace ssb
