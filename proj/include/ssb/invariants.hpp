#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ssb/algebra.hpp"
#include "ssb/matrix.hpp"
#include "ssb/sparse.hpp"

namespace ssb {

/// Entry (i, j) = dim e_i A e_j.
IntMatrix cartan_matrix(const FiniteAlgebra& A);
std::vector<mpz_class> cartan_invariants(const FiniteAlgebra& A);
mpz_class cartan_determinant(const FiniteAlgebra& A);

Subspace centre(const FiniteAlgebra& A);

/// Right socle: elements x with x * a = 0 for every arrow a.
Subspace socle(const FiniteAlgebra& A);
/// Right socle of the projective e_v A.
Subspace socle_of_projective(const FiniteAlgebra& A, std::uint32_t v);

/// Linear form f on the basis with f(ab) = f(ba) and (a,b) -> f(ab)
/// nondegenerate.
struct SymmetrizingForm {
  SparseVec coeffs;
  Scalar operator()(const SparseVec& x) const;
};

/// f = 1 on the socle path of each e_v A and 0 on the other basis paths.
/// Throws NotSymmetric when a socle is not one-dimensional or the form
/// fails the symmetry or nondegeneracy checks.
SymmetrizingForm symmetrizing_form(const FiniteAlgebra& A);

/// Gram matrix rows: row i holds f(b_i b_j) for all j.
std::vector<SparseVec> gram_rows(const FiniteAlgebra& A, const SymmetrizingForm& f);

Subspace commutator_subspace(const FiniteAlgebra& A);

/// T_n(A) = {x : x^(l^n) in the commutator subspace}, l the characteristic.
/// Throws CharZero in characteristic 0.
Subspace kulshammer_space(const FiniteAlgebra& A, unsigned n);
/// Orthogonal of T_n(A) under (a,b) -> f(ab).
Subspace kulshammer_perp(const FiniteAlgebra& A, unsigned n);

/// Span of the nontrivial basis paths.
Subspace arrow_ideal(const FiniteAlgebra& A);

/// Radical layer dims rad^k/rad^{k+1} (k >= 1) of the commutative quotient
/// Z/I, where Z is a subalgebra of the centre and I an ideal of Z.
/// Throws NotAnIdeal when I is not an ideal of Z.
std::vector<std::size_t> quotient_radical_profile(const FiniteAlgebra& A, const Subspace& Z,
                                                  const Subspace& I);

}  // namespace ssb
