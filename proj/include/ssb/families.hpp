#pragma once

#include <cstdint>
#include <string>

#include "ssb/algebra.hpp"
#include "ssb/family_spec.hpp"
#include "ssb/quiver.hpp"

namespace ssb {

/// Γ(p,q;r) by its minimal generators. With `superfluous`, also adds the
/// i = p and j = q members of the socle-type relations, which lie in the
/// ideal already.
Presentation gamma(int p, int q, int r, std::uint32_t ch = 0, bool superfluous = false);
Presentation lambda(int p, int q, int s, int t, std::uint32_t ch = 0);
/// Cyclic quiver on n vertices modulo all paths of length n*m + 1.
Presentation nakayama(int n, int m, std::uint32_t ch = 0);

Presentation presentation(const FamilySpec& spec, std::uint32_t ch = 0);

/// Closed-form dimension of the algebra.
std::size_t family_dimension(const FamilySpec& spec);

/// Vertex and arrow indices of the two-cycle quiver.
struct CycleQuiver {
  int p, q;
  std::uint32_t alpha(int i) const { return static_cast<std::uint32_t>(i - 1); }
  std::uint32_t beta(int j) const { return static_cast<std::uint32_t>(p + j - 1); }
  /// Vertex label (1-based) at the origin of α_i, indices taken cyclically.
  int A(int i) const;
  /// Vertex label at the origin of β_j, indices taken cyclically.
  int B(int j) const;
  /// α_a α_{a+1} ... α_b with indices mod p (empty when b = a - 1).
  Word alphas(int a, int b) const;
  Word betas(int a, int b) const;
  Word gamma() const { return alphas(1, p); }
  Word delta() const { return betas(1, q); }
};

struct StructureReport {
  bool special_biserial = false;
  bool weakly_symmetric = false;
  bool symmetric_form_ok = false;
  bool arrow_degrees_ok = false;
  std::size_t nonuniserial_count = 0;

  bool all_ok() const {
    return special_biserial && weakly_symmetric && symmetric_form_ok && arrow_degrees_ok;
  }
};

StructureReport validate_structure(const FiniteAlgebra& A);

}  // namespace ssb
