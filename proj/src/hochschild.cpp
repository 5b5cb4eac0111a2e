#include "ssb/hochschild.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "ssb/errors.hpp"
#include "ssb/families.hpp"
#include "ssb/sparse.hpp"

namespace ssb {

namespace {

int sg(long k) { return (k % 2 == 0) ? 1 : -1; }

[[noreturn]] void transcription_error(const std::string& what) {
  throw Error(ErrorKind::ComplexCheckFailed, what);
}

// ---------------------------------------------------------------------------
// Explicit resolution of Γ(p,q;r), p > 1.
//
// Summands are labelled by cycle position. In even degree 2n the α summands
// are A:i = (A(i), A(i+n)) for 2 <= i <= p-n and (A(i), A(i+n+1)) for
// p-n+1 <= i <= p, likewise B:j, plus E1 = (1,1). In odd degree 2n-1 they
// are A:i = (A(i), A(i+n)) for all i and B:j = (B(j), B(j+n)) for all j.
// Vertex labels such as e_{p+j-1} are read through B(j), which also fixes
// the e_q of degree 2p-1 as B(q-p+1).

class GammaTable {
 public:
  GammaTable(const FiniteAlgebra& A, int p, int q, int r) : A_(A), c_{p, q}, p_(p), q_(q), r_(r) {}

  BimoduleStage build(int deg) const {
    BimoduleStage st;
    st.degree = deg;
    const int n = (deg + 1) / 2;
    st.summands = deg % 2 == 0 ? even_summands(deg / 2) : odd_summands(n);
    if (deg == 0) return st;
    const auto targets = deg % 2 == 0 ? odd_summands(n) : even_summands(n - 1);
    st.differential.resize(st.summands.size());
    for (std::size_t s = 0; s < st.summands.size(); ++s) {
      Emit out{&st.differential[s], &targets};
      const auto& lab = st.summands[s].label;
      const char kind = lab[0];
      const int idx = kind == 'E' ? 1 : std::stoi(lab.substr(2));
      if (deg % 2 == 1) {
        odd(n, kind, idx, out);
      } else {
        even(n, kind, idx, out);
      }
    }
    return st;
  }

 private:
  struct Emit {
    std::vector<TensorTerm>* terms;
    const std::vector<Summand>* targets;
  };

  std::uint32_t vA(int i) const { return static_cast<std::uint32_t>(c_.A(i) - 1); }
  std::uint32_t vB(int j) const { return static_cast<std::uint32_t>(c_.B(j) - 1); }

  Summand summand(std::string label, int left, int right) const {
    return Summand{static_cast<std::uint32_t>(left - 1), static_cast<std::uint32_t>(right - 1),
                   std::move(label)};
  }

  std::vector<Summand> even_summands(int n) const {
    std::vector<Summand> out;
    for (int i = 1; i <= p_; ++i) {
      if (i == 1 && n != p_) continue;
      const int right = i <= p_ - n ? c_.A(i + n) : c_.A(i + n + 1);
      out.push_back(summand("A:" + std::to_string(i), c_.A(i), right));
    }
    for (int j = 1; j <= q_; ++j) {
      if (j == 1 && n != q_) continue;
      const int right = j <= q_ - n ? c_.B(j + n) : c_.B(j + n + 1);
      out.push_back(summand("B:" + std::to_string(j), c_.B(j), right));
    }
    out.push_back(summand("E1", 1, 1));
    return out;
  }

  std::vector<Summand> odd_summands(int n) const {
    std::vector<Summand> out;
    for (int i = 1; i <= p_; ++i) out.push_back(summand("A:" + std::to_string(i), c_.A(i), c_.A(i + n)));
    for (int j = 1; j <= q_; ++j) out.push_back(summand("B:" + std::to_string(j), c_.B(j), c_.B(j + n)));
    return out;
  }

  Path word_path(const Word& w) const {
    auto path = make_path(A_.quiver(), w);
    if (!path) transcription_error("non-composable word in resolution table");
    return *path;
  }

  Path eA(int i) const { return Path::vertex(vA(i)); }
  Path eB(int j) const { return Path::vertex(vB(j)); }
  Path al(int a, int b) const {
    if (b == a - 1) return eA(a);
    if (b < a - 1) transcription_error("reversed α range");
    return word_path(c_.alphas(a, b));
  }
  Path be(int a, int b) const {
    if (b == a - 1) return eB(a);
    if (b < a - 1) transcription_error("reversed β range");
    return word_path(c_.betas(a, b));
  }
  Path gam() const { return word_path(c_.gamma()); }
  Path del() const { return word_path(c_.delta()); }
  static Path pw(const Path& x, int k) {
    Path out = Path::vertex(x.origin);
    for (int i = 0; i < k; ++i) out = cat(out, x);
    return out;
  }
  Path gd() const { return cat(gam(), del()); }
  Path dg() const { return cat(del(), gam()); }
  // η_i = α_i..α_p δ α_1..α_{i-1},  θ_j = β_j..β_q γ β_1..β_{j-1}
  Path eta(int i, int k) const { return pw(cat(al(i, p_), del(), al(1, i - 1)), k); }
  Path theta(int j, int k) const { return pw(cat(be(j, q_), gam(), be(1, j - 1)), k); }

  static Path cat(const Path& x, const Path& y) {
    if (x.terminus != y.origin) transcription_error("non-composable product in resolution table");
    return Path{x.origin, y.terminus, x.arrows + y.arrows};
  }
  template <typename... Rest>
  static Path cat(const Path& x, const Path& y, const Rest&... rest) {
    return cat(cat(x, y), rest...);
  }

  // Target found by (t(u), o(v)); `hint` picks the α or β summand when the
  // key is shared.
  static void add(const Emit& out, long coeff, Path u, Path v, char hint) {
    std::optional<std::size_t> found;
    std::size_t count = 0;
    for (std::size_t t = 0; t < out.targets->size(); ++t) {
      const auto& s = (*out.targets)[t];
      if (s.left != u.terminus || s.right != v.origin) continue;
      ++count;
      if (!found || s.label[0] == hint) found = t;
    }
    if (!found) transcription_error("term without a target summand");
    if (count > 1 && (*out.targets)[*found].label[0] != hint) {
      transcription_error("ambiguous target summand");
    }
    out.terms->push_back(TensorTerm{mpq_class(coeff), std::move(u), std::move(v), *found});
  }

  // d^{2n-1}
  void odd(int n, char kind, int idx, const Emit& o) const {
    const int p = p_, q = q_, r = r_;
    const Path GD = gd(), DG = dg();
    if (kind == 'A') {
      const int i = idx;
      if (n == p && i >= 2) {
        const int S = sg(i), T = sg((p - i) * (p - 1));
        add(o, S, eA(i), eta(i, r), 'A');
        add(o, S * T, al(i, p), al(1, i - 1), 'A');
        add(o, -S, eta(i, r), eA(i), 'A');
        for (int m = 1; m <= p - i; ++m) {
          add(o, -S * sg(p) * T * sg(m * (p - 1)), al(i, p - m),
              cat(al(p - m + 1, p), del(), pw(GD, r - 1), al(1, i - 1)), 'A');
        }
        for (int m = p - i + 2; m <= p - 1; ++m) {
          add(o, S * sg(p) * T * sg(m * (p - 1)), cat(al(i, p), pw(DG, r - 1), del(), al(1, p - m)),
              al(p - m + 1, i - 1), 'A');
        }
      } else if (n == p) {  // i == 1
        add(o, 1, eA(1), gam(), 'A');
        for (int m = 1; m <= p - 1; ++m) {
          add(o, -sg(m * (p - 1)), al(1, p - m), cat(al(p - m + 1, p), del(), pw(GD, r - 1)), 'A');
        }
        for (int m = 1; m <= p - 1; ++m) {
          add(o, sg(p) * sg(m * (p - 1)), cat(del(), pw(GD, r - 1), al(1, p - m)), al(p - m + 1, p), 'A');
        }
        add(o, sg(p), gam(), eA(1), 'A');
      } else if (i >= 2 && i <= p - n) {
        add(o, 1, eA(i), al(i + n - 1, i + n - 1), 'A');
        add(o, -1, al(i, i), eA(i + n), 'A');
      } else if (i >= p - n + 2) {
        const int S = sg(i + p + 1), T = sg((p - i) * (n - 1));
        add(o, S, eA(i), eta(i + n - p, r), 'A');
        add(o, S * T, al(i, p), al(1, n - p + i - 1), 'A');
        add(o, -S, eta(i, r), eA(i + n - p), 'A');
        for (int m = 1; m <= p - i; ++m) {
          add(o, -S * sg(n) * T * sg(m * (n - 1)), al(i, p - m),
              cat(al(n - m + 1, p), del(), pw(GD, r - 1), al(1, n - p + i - 1)), 'A');
        }
        for (int m = p - i + 2; m <= n - 1; ++m) {
          add(o, S * sg(n) * T * sg(m * (n - 1)), cat(al(i, p), pw(DG, r - 1), del(), al(1, p - m)),
              al(n - m + 1, n - p + i - 1), 'A');
        }
      } else if (i == p - n + 1) {
        add(o, 1, eA(i), al(p, p), 'A');
        for (int m = 1; m <= n - 1; ++m) {
          add(o, sg(n) * sg(m * (n - 1)), al(p - n + 1, p - m), cat(al(n - m + 1, p), del(), pw(GD, r - 1)),
              'A');
        }
        add(o, -1, al(p - n + 1, p), eA(1), 'A');
      } else {  // i == 1
        const int S = sg(n - 1);
        add(o, S, eA(1), al(1, n), 'A');
        for (int m = 1; m <= n - 1; ++m) {
          add(o, S * sg(n) * sg(m * (n - 1)), cat(del(), pw(GD, r - 1), al(1, p - m)), al(n - m + 1, n), 'A');
        }
        add(o, S * sg(n), al(1, 1), eA(n + 1), 'A');
      }
      return;
    }
    const int j = idx;
    if (j >= 2 && j <= q - n) {
      add(o, -1, eB(j), be(j + n - 1, j + n - 1), 'B');
      add(o, 1, be(j, j), eB(j + n), 'B');
    } else if (j >= q - n + 2) {
      const int S = sg(j + q), T = sg((q - j) * (n - 1));
      add(o, S, eB(j), theta(j + n - q, r), 'B');
      add(o, S * T, be(j, q), be(1, n + j - q - 1), 'B');
      add(o, -S, theta(j, r), eB(j + n), 'B');
      for (int m = 1; m <= q - j; ++m) {
        add(o, -S * sg(n) * T * sg(m * (n - 1)), be(j, q - m),
            cat(be(n - m + 1, q), pw(GD, r - 1), gam(), be(1, n - q + j - 1)), 'B');
      }
      for (int m = q - j + 2; m <= n - 1; ++m) {
        add(o, S * sg(n) * T * sg(m * (n - 1)), cat(be(j, q), gam(), pw(DG, r - 1), be(1, q - m)),
            be(n - m + 1, n - q + j - 1), 'B');
      }
    } else if (n == q && j == 1) {
      // q = p: the two degree-(2p-1) generators at B(1) coincide; their
      // terms with a target in degree 2p-2 make up the generator.
      for (int m = 1; m <= n - 1; ++m) {
        add(o, -sg(n) * sg(m * (n - 1)), be(1, q - m), cat(be(n - m + 1, q), pw(GD, r - 1), gam()), 'B');
      }
      add(o, 1, del(), eB(1), 'B');
      add(o, sg(n), eB(1), del(), 'B');
      for (int m = 1; m <= n - 1; ++m) {
        add(o, sg(m * (n - 1)), cat(pw(GD, r - 1), gam(), be(1, q - m)), be(n - m + 1, n), 'B');
      }
    } else if (j == q - n + 1) {
      add(o, -1, eB(j), be(q, q), 'B');
      for (int m = 1; m <= n - 1; ++m) {
        add(o, -sg(n) * sg(m * (n - 1)), be(q - n + 1, q - m), cat(be(n - m + 1, q), pw(GD, r - 1), gam()),
            'B');
      }
      add(o, 1, be(q - n + 1, q), eB(1), 'B');
    } else {  // j == 1
      const int S = sg(n);
      add(o, S, eB(1), be(1, n), 'B');
      for (int m = 1; m <= n - 1; ++m) {
        add(o, S * sg(n) * sg(m * (n - 1)), cat(pw(GD, r - 1), gam(), be(1, q - m)), be(n - m + 1, n), 'B');
      }
      add(o, S * sg(n), be(1, 1), eB(n + 1), 'B');
    }
  }

  // d^{2n}
  void even(int n, char kind, int idx, const Emit& o) const {
    const int p = p_, q = q_, r = r_;
    const Path GD = gd(), DG = dg();
    if (kind == 'E') {
      const int sa = n == p ? sg(p) : 1;  // sign on the δ(γδ)^k term
      const int sb = n == p ? 1 : sg(n);
      const int sj = n == p ? -1 : 1;
      for (int k = 0; k <= r - 1; ++k) {
        for (int i = 0; i <= p - n; ++i) {
          add(o, sa, cat(del(), pw(GD, k), al(1, i)), cat(al(i + n + 1, p), pw(DG, r - k - 1)), 'A');
          add(o, sb, cat(pw(GD, k), al(1, i)), cat(al(i + n + 1, p), pw(DG, r - k - 1), del()), 'A');
        }
        for (int j = 0; j <= q - n; ++j) {
          add(o, sj, cat(gam(), pw(DG, k), be(1, j)), cat(be(j + n + 1, q), pw(GD, r - k - 1)), 'B');
          add(o, sj * sg(n), cat(pw(DG, k), be(1, j)), cat(be(j + n + 1, q), pw(GD, r - k - 1), gam()), 'B');
        }
      }
      return;
    }
    if (kind == 'A') {
      const int i = idx;
      if (i >= p - n + 1) {
        add(o, 1, eA(i), al(i + n - p, i + n - p), 'A');
        add(o, -sg(n), al(i, i), eA(i + n + 1), 'A');
        return;
      }
      for (int k = 0; k <= r; ++k) add(o, 1, eta(i, k), eta(i + n, r - k), 'A');
      for (int k = 0; k <= r - 1; ++k) {
        const Path tail = eta(i + n, r - k - 1);
        for (int m = 0; m <= p - i - n; ++m) {
          add(o, 1, cat(eta(i, k), al(i, i + m)), cat(al(i + m + n + 1, p), del(), al(1, i + n - 1), tail), 'A');
        }
        for (int m = 0; m <= i - 2; ++m) {
          add(o, 1, cat(eta(i, k), al(i, p), del(), al(1, m)), cat(al(m + n + 1, i + n - 1), tail), 'A');
        }
        for (int j = 0; j <= q - n; ++j) {
          add(o, sg(n), cat(eta(i, k), al(i, p), be(1, j)), cat(be(j + n + 1, q), al(1, i + n - 1), tail), 'A');
        }
      }
      return;
    }
    const int j = idx;
    if (j >= q - n + 1) {
      add(o, 1, eB(j), be(j + n - q, j + n - q), 'B');
      add(o, -sg(n), be(j, j), eB(j + n + 1), 'B');
      return;
    }
    for (int k = 0; k <= r; ++k) add(o, 1, theta(j, k), theta(j + n, r - k), 'B');
    for (int k = 0; k <= r - 1; ++k) {
      const Path tail = theta(j + n, r - k - 1);
      for (int m = 0; m <= q - j - n; ++m) {
        add(o, 1, cat(theta(j, k), be(j, j + m)), cat(be(j + m + n + 1, q), gam(), be(1, j + n - 1), tail), 'B');
      }
      for (int m = 0; m <= j - 2; ++m) {
        add(o, 1, cat(theta(j, k), be(j, q), gam(), be(1, m)), cat(be(m + n + 1, j + n - 1), tail), 'B');
      }
      if (n == p) {
        add(o, -1, cat(theta(j, k), be(j, q)), cat(be(1, j + p - 1), tail), 'A');
      } else {
        for (int i = 0; i <= p - n; ++i) {
          add(o, sg(n), cat(theta(j, k), be(j, q), al(1, i)), cat(al(i + n + 1, p), be(1, j + n - 1), tail), 'A');
        }
      }
    }
  }

  const FiniteAlgebra& A_;
  CycleQuiver c_;
  int p_, q_, r_;
};

// ---------------------------------------------------------------------------
// Generic start: vertices, arrows, relations.

std::vector<BimoduleStage> generic_stages(const FiniteAlgebra& A, int n) {
  const auto& Q = A.quiver();
  std::vector<BimoduleStage> out;
  BimoduleStage s0;
  for (std::uint32_t v = 0; v < Q.num_vertices(); ++v) s0.summands.push_back(Summand{v, v, "e" + Q.vertices[v]});
  out.push_back(std::move(s0));
  if (n == 0) return out;

  BimoduleStage s1;
  s1.degree = 1;
  for (std::uint32_t a = 0; a < Q.num_arrows(); ++a) {
    const auto& arr = Q.arrows[a];
    s1.summands.push_back(Summand{arr.origin, arr.terminus, arr.name});
    const Path ap{arr.origin, arr.terminus, Word(1, static_cast<char16_t>(a))};
    s1.differential.push_back({TensorTerm{1, Path::vertex(arr.origin), ap, arr.origin},
                               TensorTerm{-1, ap, Path::vertex(arr.terminus), arr.terminus}});
  }
  out.push_back(std::move(s1));
  if (n == 1) return out;

  BimoduleStage s2;
  s2.degree = 2;
  const auto& rels = A.presentation().relations;
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const auto& rel = rels[k];
    const Path& lead = rel.front().path;
    s2.summands.push_back(Summand{lead.origin, lead.terminus, "rel" + std::to_string(k + 1)});
    std::vector<TensorTerm> terms;
    for (const auto& term : rel) {
      const Word& w = term.path.arrows;
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const auto prefix = pos == 0 ? Path::vertex(term.path.origin) : *make_path(Q, w.substr(0, pos));
        const auto suffix = pos + 1 == w.size() ? Path::vertex(term.path.terminus) : *make_path(Q, w.substr(pos + 1));
        terms.push_back(TensorTerm{term.coeff, prefix, suffix, static_cast<std::size_t>(w[pos])});
      }
    }
    s2.differential.push_back(std::move(terms));
  }
  out.push_back(std::move(s2));
  return out;
}

// Positions of basis elements inside their block e_o A e_t.
struct Blocks {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::size_t>> members;
  std::vector<std::size_t> position;

  explicit Blocks(const FiniteAlgebra& A) : position(A.dim()) {
    for (std::size_t b = 0; b < A.dim(); ++b) {
      auto& list = members[{A.basis()[b].origin, A.basis()[b].terminus}];
      position[b] = list.size();
      list.push_back(b);
    }
  }
  const std::vector<std::size_t>& block(std::uint32_t o, std::uint32_t t) const {
    static const std::vector<std::size_t> empty;
    auto it = members.find({o, t});
    return it == members.end() ? empty : it->second;
  }
};

Path concat(const Path& x, const Path& y) { return Path{x.origin, y.terminus, x.arrows + y.arrows}; }

void check_terms(const BimoduleStage& lower, const BimoduleStage& upper) {
  for (std::size_t s = 0; s < upper.differential.size(); ++s) {
    const auto& src = upper.summands[s];
    for (const auto& t : upper.differential[s]) {
      if (t.target >= lower.summands.size()) transcription_error("target out of range");
      const auto& dst = lower.summands[t.target];
      if (t.u.origin != src.left || t.v.terminus != src.right || t.u.terminus != dst.left ||
          t.v.origin != dst.right) {
        transcription_error("term of " + src.label + " does not fit " + dst.label);
      }
    }
  }
}

}  // namespace

bool has_gamma_resolution(const FiniteAlgebra& A) {
  const auto& fam = A.presentation().family;
  return fam && fam->kind == FamilySpec::Kind::Gamma && fam->p > 1;
}

int max_stage(const FiniteAlgebra& A) {
  return has_gamma_resolution(A) ? 2 * A.presentation().family->p : 2;
}

std::vector<BimoduleStage> stages(const FiniteAlgebra& A, int n) {
  if (n < 0 || n > max_stage(A)) {
    throw Error(ErrorKind::UnsupportedDegree,
                "stage " + std::to_string(n) + " beyond " + std::to_string(max_stage(A)));
  }
  std::vector<BimoduleStage> out;
  if (has_gamma_resolution(A)) {
    const auto& f = *A.presentation().family;
    GammaTable table(A, f.p, f.q, f.r);
    for (int k = 0; k <= n; ++k) out.push_back(table.build(k));
  } else {
    out = generic_stages(A, n);
  }
  for (int k = 1; k <= n; ++k) check_terms(out[k - 1], out[k]);
  for (int k = 2; k <= n; ++k) check_complex(A, out[k - 1], out[k]);
  return out;
}

BimoduleStage stage(const FiniteAlgebra& A, int n) { return stages(A, n).back(); }

void check_complex(const FiniteAlgebra& A, const BimoduleStage& lower, const BimoduleStage& upper) {
  const auto ch = A.characteristic();
  for (std::size_t s = 0; s < upper.differential.size(); ++s) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
    for (const auto& t1 : upper.differential[s]) {
      for (const auto& t2 : lower.differential[t1.target]) {
        const SparseVec x = A.element(concat(t1.u, t2.u));
        if (x.is_zero()) continue;
        const SparseVec y = A.element(concat(t2.v, t1.v));
        if (y.is_zero()) continue;
        const Scalar c = Scalar(t1.coeff, ch) * Scalar(t2.coeff, ch);
        for (const auto& [i, a] : x) {
          for (const auto& [j, b] : y) {
            auto [it, inserted] = acc.try_emplace({t2.target, i, j}, c * a * b);
            if (!inserted) it->second += c * a * b;
          }
        }
      }
    }
    for (const auto& [key, c] : acc) {
      if (!c.is_zero()) {
        throw Error(ErrorKind::ComplexCheckFailed,
                    "d^" + std::to_string(lower.degree) + " o d^" + std::to_string(upper.degree) +
                        " is nonzero on " + upper.summands[s].label);
      }
    }
  }
}

std::size_t hom_dim(const FiniteAlgebra& A, const BimoduleStage& st) {
  Blocks blocks(A);
  std::size_t d = 0;
  for (const auto& s : st.summands) d += blocks.block(s.left, s.right).size();
  return d;
}

std::size_t coboundary_rank(const FiniteAlgebra& A, const BimoduleStage& from, const BimoduleStage& to) {
  const auto ch = A.characteristic();
  Blocks blocks(A);
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& s : to.summands) {
    offset.push_back(total);
    total += blocks.block(s.left, s.right).size();
  }
  // Terms of d^{n+1} grouped by the summand of P^n they land in.
  std::vector<std::vector<std::pair<std::size_t, const TensorTerm*>>> by_target(from.summands.size());
  for (std::size_t g = 0; g < to.differential.size(); ++g) {
    for (const auto& t : to.differential[g]) by_target[t.target].emplace_back(g, &t);
  }
  std::vector<SparseVec> images;
  for (std::size_t s = 0; s < from.summands.size(); ++s) {
    std::vector<std::tuple<std::size_t, Scalar, SparseVec, SparseVec>> terms;
    for (const auto& [g, t] : by_target[s]) {
      terms.emplace_back(g, Scalar(t->coeff, ch), A.element(t->u), A.element(t->v));
    }
    for (std::size_t b : blocks.block(from.summands[s].left, from.summands[s].right)) {
      SparseAccumulator acc(ch);
      const SparseVec x = A.basis_vector(b);
      for (const auto& [g, c, u, v] : terms) {
        const SparseVec y = A.multiply(A.multiply(u, x), v);
        for (const auto& [k, a] : y) acc.add(offset[g] + blocks.position[k], c * a);
      }
      images.push_back(acc.take());
    }
  }
  return rank_of(images, ch);
}

std::map<int, std::size_t> hh_table(const FiniteAlgebra& A, int max_degree) {
  const int limit = max_stage(A) - 1;
  if (max_degree < 0 || max_degree > limit) {
    throw Error(ErrorKind::UnsupportedDegree,
                "HH^" + std::to_string(max_degree) + " needs stages beyond " + std::to_string(max_stage(A)));
  }
  const auto st = stages(A, max_degree + 1);
  std::map<int, std::size_t> out;
  std::size_t previous = 0;
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t rank = coboundary_rank(A, st[n], st[n + 1]);
    out[n] = hom_dim(A, st[n]) - rank - previous;
    previous = rank;
  }
  return out;
}

std::size_t hh_dim(const FiniteAlgebra& A, int n) { return hh_table(A, n).at(n); }

std::vector<std::vector<std::vector<std::size_t>>> ext_multiplicities(const FiniteAlgebra& A, int up_to) {
  const auto ch = A.characteristic();
  const std::size_t nv = A.num_vertices();
  const auto& basis = A.basis();
  std::vector<std::vector<std::size_t>> starting(nv);
  for (std::size_t b = 0; b < A.dim(); ++b) starting[basis[b].origin].push_back(b);
  std::vector<std::size_t> local(A.dim());
  for (auto& list : starting) {
    for (std::size_t k = 0; k < list.size(); ++k) local[list[k]] = k;
  }

  // Free right module on a list of vertices, coordinates block by block.
  struct Free {
    std::vector<std::uint32_t> gens;
    std::vector<std::size_t> offset;
    std::size_t dim = 0;
  };
  auto make_free = [&](std::vector<std::uint32_t> gens) {
    Free F{std::move(gens), {}, 0};
    for (auto v : F.gens) {
      F.offset.push_back(F.dim);
      F.dim += starting[v].size();
    }
    return F;
  };
  auto times_arrow = [&](const Free& F, const SparseVec& x, std::uint32_t a) {
    SparseAccumulator acc(ch);
    for (const auto& [k, c] : x) {
      const auto g = static_cast<std::size_t>(
          std::upper_bound(F.offset.begin(), F.offset.end(), k) - F.offset.begin() - 1);
      const std::size_t b = starting[F.gens[g]][k - F.offset[g]];
      for (const auto& [b2, c2] : A.right_arrow(A.basis_vector(b), a)) acc.add(F.offset[g] + local[b2], c * c2);
    }
    return acc.take();
  };
  auto times_path = [&](const Free& F, SparseVec x, const Path& path) {
    for (char16_t a : path.arrows) x = times_arrow(F, x, a);
    return x;
  };
  auto ending_at = [&](const Free& F, const SparseVec& x, std::uint32_t v) {
    SparseVec out;
    for (const auto& [k, c] : x) {
      const auto g = static_cast<std::size_t>(
          std::upper_bound(F.offset.begin(), F.offset.end(), k) - F.offset.begin() - 1);
      if (basis[starting[F.gens[g]][k - F.offset[g]]].terminus == v) out.push_back(k, c);
    }
    return out;
  };

  std::vector<std::vector<std::vector<std::size_t>>> out(
      up_to + 1, std::vector<std::vector<std::size_t>>(nv, std::vector<std::size_t>(nv, 0)));
  for (std::uint32_t i = 0; i < nv; ++i) {
    out[0][i][i] = 1;
    Free F = make_free({i});
    Subspace M(F.dim, ch);
    for (std::size_t k = 0; k < starting[i].size(); ++k) {
      if (!basis[starting[i][k]].trivial()) M.add(SparseVec::unit(k, Scalar(1, ch)));
    }
    for (int n = 1; n <= up_to; ++n) {
      // top of M: generators of M e_v modulo M J e_v
      Subspace MJ(F.dim, ch);
      for (const auto& m : M.basis()) {
        for (std::uint32_t a = 0; a < A.quiver().num_arrows(); ++a) MJ.add(times_arrow(F, m, a));
      }
      std::vector<std::uint32_t> gens;
      std::vector<SparseVec> tops;
      for (std::uint32_t v = 0; v < nv; ++v) {
        Subspace acc = MJ;
        for (const auto& m : M.basis()) {
          SparseVec mv = ending_at(F, m, v);
          if (acc.add(mv)) {
            gens.push_back(v);
            tops.push_back(std::move(mv));
          }
        }
      }
      for (auto v : gens) ++out[n][i][v];
      if (n == up_to || gens.empty()) break;
      Free P = make_free(gens);
      std::vector<SparseVec> images;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t b : starting[gens[g]]) images.push_back(times_path(F, tops[g], basis[b]));
      }
      Subspace K(P.dim, ch);
      for (auto& k : kernel_of_images(images, F.dim, ch)) K.add(k);
      F = std::move(P);
      M = std::move(K);
    }
  }
  return out;
}

std::vector<std::size_t> bimodule_homology(const FiniteAlgebra& A, const std::vector<BimoduleStage>& st) {
  const auto ch = A.characteristic();
  const std::size_t nv = A.num_vertices();
  std::vector<std::vector<std::size_t>> ending(nv), starting(nv);
  std::vector<std::size_t> pos_end(A.dim()), pos_start(A.dim());
  for (std::size_t b = 0; b < A.dim(); ++b) {
    auto& e = ending[A.basis()[b].terminus];
    pos_end[b] = e.size();
    e.push_back(b);
    auto& s = starting[A.basis()[b].origin];
    pos_start[b] = s.size();
    s.push_back(b);
  }
  // x (x) y in summand s sits at offset[s] + pos(x) * |e_right A| + pos(y)
  auto offsets = [&](const BimoduleStage& stg) {
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (const auto& sm : stg.summands) {
      off.push_back(total);
      total += ending[sm.left].size() * starting[sm.right].size();
    }
    off.push_back(total);
    return off;
  };
  const std::size_t top = st.size() - 1;
  std::vector<std::size_t> dims, ranks(st.size() + 1, 0);
  ranks[0] = A.dim();  // multiplication P^0 -> A is onto
  for (std::size_t n = 0; n <= top; ++n) {
    dims.push_back(offsets(st[n]).back());
    if (n == 0) continue;
    const auto lower = offsets(st[n - 1]);
    std::vector<SparseVec> images;
    for (std::size_t s = 0; s < st[n].summands.size(); ++s) {
      const auto& sm = st[n].summands[s];
      std::vector<std::tuple<Scalar, SparseVec, SparseVec, std::size_t>> terms;
      for (const auto& t : st[n].differential[s]) {
        terms.emplace_back(Scalar(t.coeff, ch), A.element(t.u), A.element(t.v), t.target);
      }
      for (std::size_t x : ending[sm.left]) {
        for (std::size_t y : starting[sm.right]) {
          SparseAccumulator acc(ch);
          for (const auto& [c, u, v, target] : terms) {
            const SparseVec xu = A.multiply(A.basis_vector(x), u);
            if (xu.is_zero()) continue;
            const SparseVec vy = A.multiply(v, A.basis_vector(y));
            const std::size_t width = starting[st[n - 1].summands[target].right].size();
            for (const auto& [i, a] : xu) {
              for (const auto& [j, b] : vy) acc.add(lower[target] + pos_end[i] * width + pos_start[j], c * a * b);
            }
          }
          images.push_back(acc.take());
        }
      }
    }
    ranks[n] = rank_of(images, ch);
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < top; ++n) out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

ResolutionReport verify_resolution(const FiniteAlgebra& A, int up_to) {
  const auto ch = A.characteristic();
  ResolutionReport rep;
  rep.up_to = up_to;
  const auto st = stages(A, up_to);
  rep.complex_ok = true;

  std::vector<std::vector<std::size_t>> starting(A.num_vertices());
  for (std::size_t b = 0; b < A.dim(); ++b) starting[A.basis()[b].origin].push_back(b);
  std::vector<std::size_t> local(A.dim());
  for (auto& list : starting) {
    for (std::size_t k = 0; k < list.size(); ++k) local[list[k]] = k;
  }
  auto offsets = [&](const BimoduleStage& s) {
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (const auto& sm : s.summands) {
      off.push_back(total);
      total += starting[sm.right].size();
    }
    off.push_back(total);
    return off;
  };

  // rank of A/rad (x) d^n, and whether its image avoids the tops
  std::vector<std::size_t> dims, ranks(up_to + 2, 0);
  bool minimal = true;
  for (int n = 0; n <= up_to; ++n) {
    const auto off = offsets(st[n]);
    dims.push_back(off.back());
    rep.stage_sizes.push_back(st[n].summands.size());
    if (n == 0) {
      ranks[0] = st[0].summands.size();
      continue;
    }
    const auto lower = offsets(st[n - 1]);
    std::vector<SparseVec> images;
    for (std::size_t s = 0; s < st[n].summands.size(); ++s) {
      std::vector<std::pair<Scalar, const TensorTerm*>> terms;
      for (const auto& t : st[n].differential[s]) {
        if (t.u.trivial()) terms.emplace_back(Scalar(t.coeff, ch), &t);
      }
      for (std::size_t b : starting[st[n].summands[s].right]) {
        SparseAccumulator acc(ch);
        for (const auto& [c, t] : terms) {
          const SparseVec y = A.multiply(A.element(t->v), A.basis_vector(b));
          for (const auto& [k, a] : y) acc.add(lower[t->target] + local[k], c * a);
        }
        SparseVec img = acc.take();
        for (const auto& [k, a] : img) {
          const auto g = static_cast<std::size_t>(std::upper_bound(lower.begin(), lower.end(), k) - lower.begin() - 1);
          if (A.basis()[starting[st[n - 1].summands[g].right][k - lower[g]]].trivial()) minimal = false;
        }
        images.push_back(std::move(img));
      }
    }
    ranks[n] = rank_of(images, ch);
  }
  bool exact = true;
  for (int n = 0; n < up_to; ++n) {
    if (dims[n] - ranks[n] != ranks[n + 1]) exact = false;
  }
  rep.exact = exact;
  rep.minimal = minimal;

  const auto ext = ext_multiplicities(A, up_to);
  rep.multiplicities_ok = true;
  for (int n = 0; n <= up_to; ++n) {
    std::vector<std::vector<std::size_t>> count(A.num_vertices(), std::vector<std::size_t>(A.num_vertices(), 0));
    for (const auto& s : st[n].summands) ++count[s.left][s.right];
    if (count != ext[n]) rep.multiplicities_ok = false;
  }
  const auto homology = bimodule_homology(A, st);
  rep.bimodule_exact = std::all_of(homology.begin(), homology.end(), [](std::size_t h) { return h == 0; });
  if (!exact || !rep.bimodule_exact) throw Error(ErrorKind::ExactnessFailure, "resolution not exact below degree " + std::to_string(up_to));
  if (!minimal) throw Error(ErrorKind::ExactnessFailure, "resolution not minimal");
  return rep;
}

}  // namespace ssb
