#include "ssb/invariants.hpp"

#include "ssb/errors.hpp"

namespace ssb {

IntMatrix cartan_matrix(const FiniteAlgebra& A) {
  const std::size_t n = A.num_vertices();
  IntMatrix C(n, n);
  for (const auto& b : A.basis()) C(b.origin, b.terminus) += 1;
  return C;
}

std::vector<mpz_class> cartan_invariants(const FiniteAlgebra& A) {
  return smith_normal_form(cartan_matrix(A));
}

mpz_class cartan_determinant(const FiniteAlgebra& A) { return bareiss_det(cartan_matrix(A)); }

namespace {

SparseVec commutator(const FiniteAlgebra& A, std::size_t i, std::size_t j) {
  return A.product(i, j) - A.product(j, i);
}

}  // namespace

Subspace centre(const FiniteAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<std::size_t> gens;
  for (std::uint32_t v = 0; v < A.num_vertices(); ++v) gens.push_back(A.vertex_index(v));
  for (std::uint32_t a = 0; a < A.quiver().num_arrows(); ++a) gens.push_back(A.arrow_index(a));
  std::vector<SparseVec> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    SparseAccumulator acc(A.characteristic());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      acc.add(commutator(A, k, gens[g]).shifted(g * n), A.one_scalar());
    }
    images[k] = acc.take();
  }
  return Subspace::span(n, A.characteristic(), kernel_of_images(images, gens.size() * n, A.characteristic()));
}

namespace {

Subspace socle_restricted(const FiniteAlgebra& A, const std::vector<std::size_t>& domain) {
  const std::size_t n = A.dim();
  const std::size_t arrows = A.quiver().num_arrows();
  std::vector<SparseVec> images;
  for (std::size_t k : domain) {
    SparseAccumulator acc(A.characteristic());
    for (std::uint32_t a = 0; a < arrows; ++a) {
      acc.add(A.right_arrow(A.basis_vector(k), a).shifted(a * n), A.one_scalar());
    }
    images.push_back(acc.take());
  }
  Subspace out(n, A.characteristic());
  for (const auto& kv : kernel_of_images(images, arrows * n, A.characteristic())) {
    SparseAccumulator acc(A.characteristic());
    for (const auto& [i, c] : kv) acc.add(domain[i], c);
    out.add(acc.take());
  }
  return out;
}

}  // namespace

Subspace socle(const FiniteAlgebra& A) {
  std::vector<std::size_t> all(A.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return socle_restricted(A, all);
}

Subspace socle_of_projective(const FiniteAlgebra& A, std::uint32_t v) {
  std::vector<std::size_t> dom;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (A.basis()[i].origin == v) dom.push_back(i);
  }
  return socle_restricted(A, dom);
}

Scalar SymmetrizingForm::operator()(const SparseVec& x) const {
  const std::uint32_t ch = coeffs.is_zero() ? 0 : coeffs.leading_coeff().characteristic();
  Scalar s(0, ch);
  auto a = x.begin();
  auto b = coeffs.begin();
  while (a != x.end() && b != coeffs.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

std::vector<SparseVec> gram_rows(const FiniteAlgebra& A, const SymmetrizingForm& f) {
  const std::size_t n = A.dim();
  std::vector<SparseVec> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& p = A.product(i, j);
      if (p.is_zero()) continue;
      rows[i].push_back(j, f(p));
    }
  }
  return rows;
}

SymmetrizingForm symmetrizing_form(const FiniteAlgebra& A) {
  SparseAccumulator acc(A.characteristic());
  for (std::uint32_t v = 0; v < A.num_vertices(); ++v) {
    Subspace s = socle_of_projective(A, v);
    if (s.dim() != 1) {
      throw Error(ErrorKind::NotSymmetric, "socle of projective at vertex " + A.quiver().vertices[v] +
                                               " has dimension " + std::to_string(s.dim()));
    }
    const SparseVec& sv = s.basis().front();
    // echelon rows are monic at the pivot: f(pivot path) = 1 gives f(sv) = 1
    acc.add(sv.leading_index(), A.one_scalar());
  }
  SymmetrizingForm f{acc.take()};
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f(A.product(i, j)) != f(A.product(j, i))) {
        throw Error(ErrorKind::NotSymmetric, "f(ab) != f(ba) for " + path_name(A.quiver(), A.basis()[i]) +
                                                 ", " + path_name(A.quiver(), A.basis()[j]));
      }
    }
  }
  auto rows = gram_rows(A, f);
  if (rank_of(rows, A.characteristic()) != n) {
    throw Error(ErrorKind::NotSymmetric, "bilinear form (a,b) -> f(ab) is degenerate");
  }
  return f;
}

Subspace commutator_subspace(const FiniteAlgebra& A) {
  Subspace k(A.dim(), A.characteristic());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      SparseVec c = commutator(A, i, j);
      if (!c.is_zero()) k.add(c);
    }
  }
  return k;
}

Subspace kulshammer_space(const FiniteAlgebra& A, unsigned n) {
  const std::uint32_t ch = A.characteristic();
  if (ch == 0) throw Error(ErrorKind::CharZero, "T_n is only defined in positive characteristic");
  Subspace kappa = commutator_subspace(A);
  // over F_l the map x -> x^(l^n) is linear modulo the commutator subspace
  std::vector<SparseVec> images;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    SparseVec x = A.basis_vector(k);
    for (unsigned step = 0; step < n; ++step) x = A.power(x, ch);
    images.push_back(kappa.reduce(x));
  }
  return Subspace::span(A.dim(), ch, kernel_of_images(images, A.dim(), ch));
}

Subspace kulshammer_perp(const FiniteAlgebra& A, unsigned n) {
  Subspace T = kulshammer_space(A, n);
  SymmetrizingForm f = symmetrizing_form(A);
  auto G = gram_rows(A, f);
  // y in T^perp iff sum_i t_i G(i, .) y = 0 for each basis vector t of T
  std::vector<SparseVec> images(A.dim());
  std::vector<SparseAccumulator> cols(A.dim(), SparseAccumulator(A.characteristic()));
  for (std::size_t k = 0; k < T.dim(); ++k) {
    SparseAccumulator row(A.characteristic());
    for (const auto& [i, c] : T.basis()[k]) row.add(G[i], c);
    for (const auto& [j, c] : row.take()) cols[j].add(k, c);
  }
  for (std::size_t j = 0; j < A.dim(); ++j) images[j] = cols[j].take();
  return Subspace::span(A.dim(), A.characteristic(), kernel_of_images(images, T.dim(), A.characteristic()));
}

Subspace arrow_ideal(const FiniteAlgebra& A) {
  Subspace J(A.dim(), A.characteristic());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (!A.basis()[i].trivial()) J.add(A.basis_vector(i));
  }
  return J;
}

std::vector<std::size_t> quotient_radical_profile(const FiniteAlgebra& A, const Subspace& Z,
                                                  const Subspace& I) {
  if (!Z.contains(I)) throw Error(ErrorKind::NotAnIdeal, "ideal is not contained in the algebra");
  for (const auto& z : Z.basis()) {
    for (const auto& x : I.basis()) {
      if (!I.contains(A.multiply(z, x))) {
        throw Error(ErrorKind::NotAnIdeal, "subspace is not closed under multiplication");
      }
    }
  }
  const Subspace R = Z.intersect(arrow_ideal(A));
  std::vector<std::size_t> profile;
  Subspace power = R;  // R^k
  std::size_t prev = power.sum(I).dim();
  while (true) {
    Subspace next(A.dim(), A.characteristic());
    for (const auto& x : power.basis()) {
      for (const auto& y : R.basis()) next.add(A.multiply(x, y));
    }
    const std::size_t cur = next.sum(I).dim();
    if (prev == cur) break;
    profile.push_back(prev - cur);
    prev = cur;
    power = std::move(next);
  }
  return profile;
}

}  // namespace ssb
