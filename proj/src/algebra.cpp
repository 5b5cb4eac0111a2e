#include "ssb/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string_view>

#include "ssb/errors.hpp"

namespace ssb {

namespace {

std::size_t hash_view(std::u16string_view v) { return std::hash<std::u16string_view>{}(v); }

void add_term(Poly& p, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

constexpr std::size_t kMaxRules = 200000;

}  // namespace

// ---------------------------------------------------------------------------
// RewriteSystem

std::optional<RewriteSystem::Occurrence> RewriteSystem::find(const Word& w, std::size_t) const {
  const std::u16string_view view(w);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& [len, count] : lengths_) {
      if (count == 0) continue;
      if (pos + len > w.size()) break;
      auto sub = view.substr(pos, len);
      auto [lo, hi] = index_.equal_range(hash_view(sub));
      for (auto it = lo; it != hi; ++it) {
        if (active_[it->second] && rules_[it->second].lhs == sub) return Occurrence{pos, it->second};
      }
    }
  }
  return std::nullopt;
}

std::vector<RewriteSystem::Occurrence> RewriteSystem::find_all(const Word& w) const {
  std::vector<Occurrence> out;
  const std::u16string_view view(w);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& [len, count] : lengths_) {
      if (count == 0) continue;
      if (pos + len > w.size()) break;
      auto sub = view.substr(pos, len);
      auto [lo, hi] = index_.equal_range(hash_view(sub));
      for (auto it = lo; it != hi; ++it) {
        if (active_[it->second] && rules_[it->second].lhs == sub) out.push_back({pos, it->second});
      }
    }
  }
  return out;
}

bool RewriteSystem::irreducible(const Word& w) const { return !find(w).has_value(); }

bool RewriteSystem::reducible_suffix(const Word& w) const {
  const std::u16string_view view(w);
  for (const auto& [len, count] : lengths_) {
    if (count == 0) continue;
    if (len > w.size()) break;
    auto sub = view.substr(w.size() - len);
    auto [lo, hi] = index_.equal_range(hash_view(sub));
    for (auto it = lo; it != hi; ++it) {
      if (active_[it->second] && rules_[it->second].lhs == sub) return true;
    }
  }
  return false;
}

Poly RewriteSystem::reduce(Poly p, std::mt19937* rng) const {
  if (rng != nullptr) {
    while (true) {
      std::vector<std::pair<Word, Occurrence>> options;
      for (const auto& [w, c] : p) {
        for (const auto& occ : find_all(w)) options.emplace_back(w, occ);
      }
      if (options.empty()) return p;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const auto& [w, occ] = options[pick(*rng)];
      const Rule& rule = rules_[occ.rule];
      Scalar c = p.at(w);
      p.erase(w);
      Word u = w.substr(0, occ.pos);
      Word v = w.substr(occ.pos + rule.lhs.size());
      for (const auto& [m, d] : rule.rhs) add_term(p, u + m + v, c * d);
    }
  }
  // Leading term first: rewriting w only creates words below w, so each
  // irreducible leading term is final.
  Poly out;
  while (!p.empty()) {
    auto node = p.extract(p.begin());
    const Word& w = node.key();
    auto occ = find(w);
    if (!occ) {
      out.insert(out.end(), std::move(node));
      continue;
    }
    const Rule& rule = rules_[occ->rule];
    const Scalar& c = node.mapped();
    Word u = w.substr(0, occ->pos);
    Word v = w.substr(occ->pos + rule.lhs.size());
    for (const auto& [m, d] : rule.rhs) add_term(p, u + m + v, c * d);
  }
  return out;
}

void RewriteSystem::add_rule(Poly p, std::vector<Poly>& pending) {
  p = reduce(std::move(p));
  if (p.empty()) return;
  auto lead = p.begin();
  Word lhs = lead->first;
  if (lhs.size() > bound_) {
    throw Error(ErrorKind::NotFiniteDimensional,
                "rewriting needs a rule of length " + std::to_string(lhs.size()) +
                    " beyond the path-length bound " + std::to_string(bound_));
  }
  if (rules_.size() >= kMaxRules) {
    throw Error(ErrorKind::NotFiniteDimensional, "completion produced too many rules");
  }
  Scalar inv = -lead->second.inverse();
  Poly rhs;
  for (auto it = std::next(lead); it != p.end(); ++it) rhs.emplace(it->first, it->second * inv);

  // rules whose lhs contains the new lhs become redundant; re-queue them
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (!active_[k] || rules_[k].lhs.find(lhs) == Word::npos) continue;
    active_[k] = false;
    --lengths_[rules_[k].lhs.size()];
    Poly back = rules_[k].rhs;
    for (auto& [w, c] : back) c = -c;
    add_term(back, rules_[k].lhs, Scalar(1, ch_));
    pending.push_back(std::move(back));
  }

  const std::size_t idx = rules_.size();
  index_.emplace(hash_view(lhs), idx);
  ++lengths_[lhs.size()];
  rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
  active_.push_back(true);
}

void RewriteSystem::complete(std::vector<Poly> relations) {
  std::vector<Poly> pending = std::move(relations);
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  while (true) {
    while (!pending.empty()) {
      Poly p = std::move(pending.back());
      pending.pop_back();
      const std::size_t before = rules_.size();
      add_rule(std::move(p), pending);
      if (rules_.size() == before) continue;
      const std::size_t k = before;
      for (std::size_t m = 0; m < k; ++m) {
        if (!active_[m]) continue;
        pairs.emplace_back(k, m);
        pairs.emplace_back(m, k);
      }
      pairs.emplace_back(k, k);
    }
    if (pairs.empty()) break;
    auto [a, b] = pairs.front();
    pairs.pop_front();
    if (!active_[a] || !active_[b]) continue;
    // overlaps: lhs_a = u o, lhs_b = o v with o a proper nonempty overlap
    const Word la = rules_[a].lhs;
    const Word lb = rules_[b].lhs;
    const std::size_t lim = std::min(la.size(), lb.size());
    for (std::size_t k = 1; k < lim; ++k) {
      if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
      Word u = la.substr(0, la.size() - k);
      Word v = lb.substr(k);
      Poly s;
      for (const auto& [m, c] : rules_[a].rhs) add_term(s, m + v, c);
      for (const auto& [m, c] : rules_[b].rhs) add_term(s, u + m, -c);
      if (!s.empty()) pending.push_back(std::move(s));
      if (!active_[a] || !active_[b]) break;
    }
  }
}

std::vector<Rule> RewriteSystem::rules() const {
  std::vector<Rule> out;
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (active_[k]) out.push_back(rules_[k]);
  }
  std::sort(out.begin(), out.end(),
            [](const Rule& x, const Rule& y) { return deglex_less(x.lhs, y.lhs); });
  return out;
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

std::size_t default_length_bound(const Presentation& pres) {
  std::size_t max_len = 1;
  for (const auto& rel : pres.relations) {
    for (const auto& t : rel) max_len = std::max(max_len, t.path.length());
  }
  return std::max<std::size_t>(16, 4 * max_len * std::max<std::size_t>(1, pres.quiver.num_arrows()));
}

namespace {

std::size_t resolve_bound(const Presentation& pres, const BuildOptions& opts) {
  if (opts.length_bound) return *opts.length_bound;
  if (const char* env = std::getenv("SSB_LEN_BOUND"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error(ErrorKind::InvalidParams, "SSB_LEN_BOUND must be a positive integer");
  }
  return default_length_bound(pres);
}

std::vector<Poly> relation_polys(const Presentation& pres) {
  const auto& q = pres.quiver;
  std::vector<Poly> out;
  for (const auto& rel : pres.relations) {
    if (rel.empty()) continue;
    Poly p;
    const Path& first = rel.front().path;
    for (const auto& term : rel) {
      const Path& path = term.path;
      if (path.length() < 2) {
        throw Error(ErrorKind::NonAdmissible,
                    "relation " + pres.relation_string(rel) + " has a term of length < 2");
      }
      auto check = make_path(q, path.arrows);
      if (!check || check->origin != path.origin || check->terminus != path.terminus) {
        throw Error(ErrorKind::NonAdmissible,
                    "relation " + pres.relation_string(rel) + " contains a non-composable path");
      }
      if (path.origin != first.origin || path.terminus != first.terminus) {
        throw Error(ErrorKind::NonAdmissible,
                    "relation " + pres.relation_string(rel) + " mixes non-parallel paths");
      }
      add_term(p, path.arrows, Scalar(term.coeff, pres.characteristic));
    }
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::build(const Presentation& pres, const BuildOptions& opts) {
  check_characteristic(pres.characteristic);
  const auto& q = pres.quiver;
  for (const auto& a : q.arrows) {
    if (a.origin >= q.num_vertices() || a.terminus >= q.num_vertices()) {
      throw Error(ErrorKind::InvalidParams, "arrow " + a.name + " has an invalid endpoint");
    }
  }
  const std::size_t bound = resolve_bound(pres, opts);
  RewriteSystem rs(pres.characteristic, bound);
  rs.complete(relation_polys(pres));

  FiniteAlgebra A(pres, std::move(rs));
  const std::uint32_t ch = pres.characteristic;

  // basis by breadth-first extension of irreducible words (deglex order)
  A.vertex_idx_.resize(q.num_vertices());
  for (std::uint32_t v = 0; v < q.num_vertices(); ++v) {
    A.vertex_idx_[v] = A.basis_.size();
    A.basis_.push_back(Path::vertex(v));
  }
  A.arrow_idx_.resize(q.num_arrows());
  std::vector<std::size_t> frontier;
  for (std::uint32_t a = 0; a < q.num_arrows(); ++a) {
    A.arrow_idx_[a] = A.basis_.size();
    Word w(1, static_cast<char16_t>(a));
    A.word_idx_.emplace(w, A.basis_.size());
    frontier.push_back(A.basis_.size());
    A.basis_.push_back(Path{q.arrows[a].origin, q.arrows[a].terminus, w});
  }
  std::size_t length = 1;
  while (!frontier.empty()) {
    ++length;
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const std::uint32_t end = A.basis_[idx].terminus;
      for (std::uint32_t a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows[a].origin != end) continue;
        Word w = A.basis_[idx].arrows + static_cast<char16_t>(a);
        if (A.rs_.reducible_suffix(w)) continue;
        if (length > bound) {
          throw Error(ErrorKind::NotFiniteDimensional,
                      "nonzero paths longer than the bound " + std::to_string(bound));
        }
        A.word_idx_.emplace(w, A.basis_.size());
        next.push_back(A.basis_.size());
        A.basis_.push_back(Path{A.basis_[idx].origin, q.arrows[a].terminus, std::move(w)});
      }
    }
    frontier = std::move(next);
  }

  const std::size_t n = A.basis_.size();
  A.right_action_.assign(q.num_arrows(), std::vector<SparseVec>(n));
  for (std::uint32_t a = 0; a < q.num_arrows(); ++a) {
    for (std::size_t k = 0; k < n; ++k) {
      const Path& b = A.basis_[k];
      if (b.terminus != q.arrows[a].origin) continue;
      if (b.trivial()) {
        A.right_action_[a][k] = SparseVec::unit(A.arrow_idx_[a], Scalar(1, ch));
        continue;
      }
      Word w = b.arrows + static_cast<char16_t>(a);
      if (auto it = A.word_idx_.find(w); it != A.word_idx_.end()) {
        A.right_action_[a][k] = SparseVec::unit(it->second, Scalar(1, ch));
      } else {
        Poly p;
        p.emplace(std::move(w), Scalar(1, ch));
        A.right_action_[a][k] = A.from_poly(A.rs_.reduce(std::move(p)));
      }
    }
  }

  A.table_.assign(n * n, SparseVec{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Path& bj = A.basis_[j];
      if (A.basis_[i].terminus != bj.origin) continue;
      if (bj.trivial()) {
        A.table_[i * n + j] = SparseVec::unit(i, Scalar(1, ch));
        continue;
      }
      const std::uint32_t last = bj.arrows.back();
      std::size_t prefix = bj.length() == 1 ? A.vertex_idx_[bj.origin]
                                            : A.word_idx_.at(bj.arrows.substr(0, bj.length() - 1));
      A.table_[i * n + j] = A.right_arrow(A.table_[i * n + prefix], last);
    }
  }

  if (opts.check_associativity && !A.associative()) {
    throw Error(ErrorKind::NonConfluent, "multiplication is not associative on basis triples");
  }
  return A;
}

SparseVec FiniteAlgebra::from_poly(const Poly& p) const {
  SparseAccumulator acc(characteristic());
  for (const auto& [w, c] : p) {
    auto it = word_idx_.find(w);
    if (it == word_idx_.end()) {
      throw Error(ErrorKind::NonConfluent, "normal form word outside the basis");
    }
    acc.add(it->second, c);
  }
  return acc.take();
}

std::optional<std::size_t> FiniteAlgebra::index_of(const Path& p) const {
  if (p.trivial()) {
    if (p.origin >= num_vertices()) return std::nullopt;
    return vertex_idx_[p.origin];
  }
  auto it = word_idx_.find(p.arrows);
  if (it == word_idx_.end()) return std::nullopt;
  return it->second;
}

SparseVec FiniteAlgebra::right_arrow(const SparseVec& x, std::uint32_t a) const {
  SparseAccumulator acc(characteristic());
  for (const auto& [k, c] : x) acc.add(right_action_[a][k], c);
  return acc.take();
}

SparseVec FiniteAlgebra::left_arrow(std::uint32_t a, const SparseVec& x) const {
  SparseAccumulator acc(characteristic());
  const std::size_t ai = arrow_idx_[a];
  for (const auto& [k, c] : x) acc.add(product(ai, k), c);
  return acc.take();
}

SparseVec FiniteAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseAccumulator acc(characteristic());
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const SparseVec& p = product(i, j);
      if (!p.is_zero()) acc.add(p, a * b);
    }
  }
  return acc.take();
}

SparseVec FiniteAlgebra::one() const {
  SparseVec v;
  for (std::size_t idx : vertex_idx_) v.push_back(idx, one_scalar());
  return v;
}

SparseVec FiniteAlgebra::element(const Word& w, std::mt19937* rng) const {
  if (w.empty()) return one();
  if (!make_path(quiver(), w)) return {};
  Poly p;
  p.emplace(w, one_scalar());
  return from_poly(rs_.reduce(std::move(p), rng));
}

SparseVec FiniteAlgebra::element(const Path& p, std::mt19937* rng) const {
  if (p.trivial()) return basis_vector(vertex_idx_.at(p.origin));
  return element(p.arrows, rng);
}

SparseVec FiniteAlgebra::power(const SparseVec& x, std::uint64_t n) const {
  SparseVec result = one();
  SparseVec base = x;
  while (n) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return result;
}

bool FiniteAlgebra::associative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& ij = product(i, j);
      if (basis_[i].terminus != basis_[j].origin) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (basis_[j].terminus != basis_[k].origin) continue;
        SparseAccumulator left(characteristic());
        for (const auto& [m, c] : ij) left.add(product(m, k), c);
        SparseAccumulator right(characteristic());
        for (const auto& [m, c] : product(j, k)) right.add(product(i, m), c);
        if (!(left.take() == right.take())) return false;
      }
    }
  }
  return true;
}

std::vector<ProjectiveInfo> FiniteAlgebra::projective_structure() const {
  std::vector<ProjectiveInfo> out;
  const auto ch = characteristic();
  for (std::uint32_t v = 0; v < num_vertices(); ++v) {
    ProjectiveInfo info{v, true, {}};
    // rad^{k+1}(e_v A) = span{x a : x in rad^k(e_v A), a arrow}
    std::vector<SparseVec> layer;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (basis_[i].origin == v) layer.push_back(basis_vector(i));
    }
    std::size_t prev_dim = layer.size();
    while (prev_dim > 0) {
      Echelon next(ch);
      for (const auto& x : layer) {
        for (std::uint32_t a = 0; a < quiver().num_arrows(); ++a) next.insert(right_arrow(x, a));
      }
      info.radical_layers.push_back(prev_dim - next.rank());
      if (prev_dim - next.rank() > 1) info.uniserial = false;
      layer = next.rows();
      prev_dim = next.rank();
    }
    out.push_back(std::move(info));
  }
  return out;
}

std::string FiniteAlgebra::element_string(const SparseVec& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x) {
    if (!first) os << " + ";
    if (!c.is_one()) os << c << '*';
    os << path_name(quiver(), basis_[i]);
    first = false;
  }
  return os.str();
}

}  // namespace ssb
