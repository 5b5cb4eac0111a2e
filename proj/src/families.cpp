#include "ssb/families.hpp"

#include "ssb/errors.hpp"
#include "ssb/invariants.hpp"

namespace ssb {

namespace {

Word repeat(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

Term term(const Quiver& q, const Word& w, long c) {
  auto path = make_path(q, w);
  return Term{mpq_class(c), *path};
}

int mod1(int i, int n) { return ((i - 1) % n + n) % n + 1; }

Quiver two_cycles(int p, int q) {
  Quiver Q;
  for (int v = 1; v <= p + q - 1; ++v) Q.vertices.push_back(std::to_string(v));
  CycleQuiver c{p, q};
  for (int i = 1; i <= p; ++i) {
    Q.arrows.push_back(Arrow{"a" + std::to_string(i), static_cast<std::uint32_t>(c.A(i) - 1),
                             static_cast<std::uint32_t>(c.A(i + 1) - 1)});
  }
  for (int j = 1; j <= q; ++j) {
    Q.arrows.push_back(Arrow{"b" + std::to_string(j), static_cast<std::uint32_t>(c.B(j) - 1),
                             static_cast<std::uint32_t>(c.B(j + 1) - 1)});
  }
  return Q;
}

}  // namespace

int CycleQuiver::A(int i) const { return mod1(i, p); }

int CycleQuiver::B(int j) const {
  int k = mod1(j, q);
  return k == 1 ? 1 : p + k - 1;
}

Word CycleQuiver::alphas(int a, int b) const {
  Word w;
  for (int i = a; i <= b; ++i) w += static_cast<char16_t>(alpha(mod1(i, p)));
  return w;
}

Word CycleQuiver::betas(int a, int b) const {
  Word w;
  for (int j = a; j <= b; ++j) w += static_cast<char16_t>(beta(mod1(j, q)));
  return w;
}

Presentation gamma(int p, int q, int r, std::uint32_t ch, bool superfluous) {
  auto spec = FamilySpec::gamma(p, q, r);
  check_characteristic(ch);
  p = spec.p;
  q = spec.q;
  Presentation pres;
  pres.quiver = two_cycles(p, q);
  pres.characteristic = ch;
  pres.family = spec;
  const auto& Q = pres.quiver;
  CycleQuiver c{p, q};
  const Word g = c.gamma(), d = c.delta();

  pres.relations.push_back({term(Q, c.alphas(p, p + 1), 1)});
  pres.relations.push_back({term(Q, c.betas(q, q + 1), 1)});
  pres.relations.push_back({term(Q, repeat(g + d, r), 1), term(Q, repeat(d + g, r), -1)});
  const int pmax = superfluous ? p : p - 1;
  const int qmax = superfluous ? q : q - 1;
  for (int i = 2; i <= pmax; ++i) {
    Word w = c.alphas(i, p) + repeat(d + g, r - 1) + d + c.alphas(1, i);
    pres.relations.push_back({term(Q, w, 1)});
  }
  for (int j = 2; j <= qmax; ++j) {
    Word w = c.betas(j, q) + repeat(g + d, r - 1) + g + c.betas(1, j);
    pres.relations.push_back({term(Q, w, 1)});
  }
  return pres;
}

Presentation lambda(int p, int q, int s, int t, std::uint32_t ch) {
  auto spec = FamilySpec::lambda(p, q, s, t);
  check_characteristic(ch);
  p = spec.p;
  q = spec.q;
  s = spec.s;
  t = spec.t;
  Presentation pres;
  pres.quiver = two_cycles(p, q);
  pres.characteristic = ch;
  pres.family = spec;
  const auto& Q = pres.quiver;
  CycleQuiver c{p, q};
  const Word g = c.gamma(), d = c.delta();

  pres.relations.push_back({term(Q, repeat(g, s), 1), term(Q, repeat(d, t), -1)});
  pres.relations.push_back({term(Q, c.alphas(p, p) + c.betas(1, 1), 1)});
  pres.relations.push_back({term(Q, c.betas(q, q) + c.alphas(1, 1), 1)});
  for (int i = 2; i <= p - 1; ++i) {
    pres.relations.push_back({term(Q, c.alphas(i, p) + repeat(g, s - 1) + c.alphas(1, i), 1)});
  }
  for (int j = 2; j <= q - 1; ++j) {
    pres.relations.push_back({term(Q, c.betas(j, q) + repeat(d, t - 1) + c.betas(1, j), 1)});
  }
  return pres;
}

Presentation nakayama(int n, int m, std::uint32_t ch) {
  auto spec = FamilySpec::nakayama(n, m);
  check_characteristic(ch);
  Presentation pres;
  pres.characteristic = ch;
  pres.family = spec;
  for (int v = 1; v <= n; ++v) pres.quiver.vertices.push_back(std::to_string(v));
  for (int i = 1; i <= n; ++i) {
    pres.quiver.arrows.push_back(Arrow{"a" + std::to_string(i), static_cast<std::uint32_t>(i - 1),
                                       static_cast<std::uint32_t>(i % n)});
  }
  const int len = n * m + 1;
  for (int start = 0; start < n; ++start) {
    Word w;
    for (int k = 0; k < len; ++k) w += static_cast<char16_t>((start + k) % n);
    pres.relations.push_back({term(pres.quiver, w, 1)});
  }
  return pres;
}

Presentation presentation(const FamilySpec& spec, std::uint32_t ch) {
  switch (spec.kind) {
    case FamilySpec::Kind::Gamma: return gamma(spec.p, spec.q, spec.r, ch);
    case FamilySpec::Kind::Lambda: return lambda(spec.p, spec.q, spec.s, spec.t, ch);
    case FamilySpec::Kind::Nakayama: return nakayama(spec.n, spec.m, ch);
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

std::size_t family_dimension(const FamilySpec& f) {
  switch (f.kind) {
    case FamilySpec::Kind::Gamma:
      return static_cast<std::size_t>((f.p + f.q) * (f.p + f.q) * f.r + f.p + f.q - 2);
    case FamilySpec::Kind::Lambda:
      return static_cast<std::size_t>(f.s * f.p * f.p + f.t * f.q * f.q + f.p + f.q - 2);
    case FamilySpec::Kind::Nakayama: return static_cast<std::size_t>(f.n * (f.n * f.m + 1));
  }
  return 0;
}

StructureReport validate_structure(const FiniteAlgebra& A) {
  StructureReport rep;
  const auto& Q = A.quiver();
  const std::uint32_t na = static_cast<std::uint32_t>(Q.num_arrows());

  std::vector<int> in(Q.num_vertices()), out(Q.num_vertices());
  for (const auto& a : Q.arrows) {
    ++out[a.origin];
    ++in[a.terminus];
  }
  bool biserial = true;
  for (std::size_t v = 0; v < Q.num_vertices(); ++v) biserial = biserial && in[v] <= 2 && out[v] <= 2;

  bool degrees = true;
  for (std::uint32_t a = 0; a < na; ++a) {
    int succ = 0, pred = 0;
    for (std::uint32_t b = 0; b < na; ++b) {
      if (!A.product(A.arrow_index(a), A.arrow_index(b)).is_zero()) ++succ;
      if (!A.product(A.arrow_index(b), A.arrow_index(a)).is_zero()) ++pred;
    }
    biserial = biserial && succ <= 1 && pred <= 1;
    degrees = degrees && succ == 1 && pred == 1;
  }
  rep.special_biserial = biserial;
  // K[X]/(X^2) is the one exception: its loop squares to zero
  const bool dual_numbers = Q.num_vertices() == 1 && na == 1 && A.dim() == 2;
  rep.arrow_degrees_ok = degrees || dual_numbers;

  bool weak = true;
  for (std::uint32_t v = 0; v < Q.num_vertices(); ++v) {
    Subspace s = socle_of_projective(A, v);
    if (s.dim() != 1) {
      weak = false;
      continue;
    }
    for (const auto& [i, c] : s.basis().front()) weak = weak && A.basis()[i].terminus == v;
  }
  rep.weakly_symmetric = weak;

  try {
    symmetrizing_form(A);
    rep.symmetric_form_ok = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSymmetric) throw;
  }

  for (const auto& info : A.projective_structure()) {
    if (!info.uniserial) ++rep.nonuniserial_count;
  }
  return rep;
}

}  // namespace ssb
