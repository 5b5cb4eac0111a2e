#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ssb/algebra.hpp"

namespace ssb {

/// Direct summand A e_left (x) e_right A of a projective bimodule.
struct Summand {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::string label;
};

/// coeff * u (x) v, lying in summand `target` of the previous stage.
struct TensorTerm {
  mpq_class coeff;
  Path u;
  Path v;
  std::size_t target = 0;
};

struct BimoduleStage {
  int degree = 0;
  std::vector<Summand> summands;
  /// Image of the generator e_left (x) e_right of each summand; empty at
  /// degree 0 (the multiplication map).
  std::vector<std::vector<TensorTerm>> differential;
};

/// True when the explicit resolution for Γ(p,q;r) with p > 1 applies.
bool has_gamma_resolution(const FiniteAlgebra& A);

/// Highest stage available: 2p for Γ with p > 1, otherwise 2.
int max_stage(const FiniteAlgebra& A);

/// Stages 0..n. Throws UnsupportedDegree beyond max_stage and
/// ComplexCheckFailed when consecutive differentials do not compose to 0.
std::vector<BimoduleStage> stages(const FiniteAlgebra& A, int n);
BimoduleStage stage(const FiniteAlgebra& A, int n);

/// Throws ComplexCheckFailed unless d^{n-1} o d^n = 0 on every generator.
void check_complex(const FiniteAlgebra& A, const BimoduleStage& lower, const BimoduleStage& upper);

/// dim Hom(P^n, A) = sum over summands (i,j) of dim e_i A e_j.
std::size_t hom_dim(const FiniteAlgebra& A, const BimoduleStage& st);

/// Rank of Hom(P^n, A) -> Hom(P^{n+1}, A), phi -> phi o d^{n+1}.
std::size_t coboundary_rank(const FiniteAlgebra& A, const BimoduleStage& from, const BimoduleStage& to);

/// dim HH^n(A). Degrees up to 1 for any algebra, up to 2p-1 for Γ(p,q;r)
/// with p > 1; UnsupportedDegree otherwise.
std::size_t hh_dim(const FiniteAlgebra& A, int n);

/// Degrees 0..max_degree in one pass.
std::map<int, std::size_t> hh_table(const FiniteAlgebra& A, int max_degree);

struct ResolutionReport {
  int up_to = 0;
  bool complex_ok = false;
  bool exact = false;
  bool minimal = false;
  bool multiplicities_ok = false;  // summands match dim Ext^n(S_i, S_j)
  bool bimodule_exact = false;     // P^up_to -> ... -> P^0 -> A -> 0 exact as vector spaces
  std::vector<std::size_t> stage_sizes;
};

/// Tensors the resolution with A/rad on the left and checks exactness of
/// the resulting complex of right modules in degrees 0..up_to-1,
/// minimality, and summand multiplicities against a numerically computed
/// minimal resolution of the simple modules. Throws ExactnessFailure when
/// exactness or minimality fails.
ResolutionReport verify_resolution(const FiniteAlgebra& A, int up_to);

/// Homology of P^up_to -> ... -> P^0 -> A -> 0 as a complex of vector
/// spaces, degrees 0..up_to-1 (all zero for a resolution).
std::vector<std::size_t> bimodule_homology(const FiniteAlgebra& A, const std::vector<BimoduleStage>& st);

/// Multiplicity table of the minimal projective resolution of each simple
/// right module: result[n][i][j] = dim Ext^n(S_i, S_j).
std::vector<std::vector<std::vector<std::size_t>>> ext_multiplicities(const FiniteAlgebra& A, int up_to);

}  // namespace ssb
