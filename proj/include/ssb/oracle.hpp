#pragma once

// Brute-force reference computations. They use only the quiver types and the
// linear algebra kernel, never the rewriting engine.

#include <cstdint>
#include <vector>

#include "ssb/algebra.hpp"
#include "ssb/quiver.hpp"
#include "ssb/sparse.hpp"

namespace ssb {

/// Quotient KQ/I computed as paths of length < N modulo the ideal closure
/// of the relations, N increased until dim KQ/(I + J^N) stabilizes.
struct BruteAlgebra {
  Quiver quiver;
  std::vector<Relation> relations;
  std::uint32_t characteristic = 0;
  std::size_t truncation = 0;  // N: every path of length >= N lies in I
  std::vector<Path> basis;     // standard paths, deglex ascending
  std::vector<SparseVec> table;  // basis[i] * basis[j] at i * dim + j

  std::size_t dim() const { return basis.size(); }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table[i * dim() + j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  std::size_t vertex_index(std::uint32_t v) const;
};

/// Throws NotFiniteDimensional when no stabilization occurs below max_length.
BruteAlgebra brute_basis(const Presentation& pres, std::size_t max_length = 96);

/// Centre by solving xb = bx over all basis elements b.
std::size_t brute_centre_dim(const BruteAlgebra& B);

/// (xy)z = x(yz) on all basis triples.
bool brute_associative(const BruteAlgebra& B);

/// dim Der(A) - dim Inn(A), derivations solved on vertices and arrows with
/// consistency on the relations. TooLarge above `limit`.
std::size_t hh1_derivations(const Presentation& pres, std::size_t limit = 60);
std::size_t hh1_derivations(const BruteAlgebra& B, std::size_t limit = 60);

/// HH^2 from the reduced bar complex relative to the vertex span.
std::size_t hh2_reduced_bar(const Presentation& pres, std::size_t limit = 60);
std::size_t hh2_reduced_bar(const BruteAlgebra& B, std::size_t limit = 60);

}  // namespace ssb
