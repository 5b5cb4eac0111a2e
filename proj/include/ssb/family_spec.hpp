#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>

namespace ssb {

/// Parameters of one of the three families. Constructed through `make_*`
/// so that the stored tuple is always canonical (p <= q, Λ(q,q;s,t) with
/// s <= t).
struct FamilySpec {
  enum class Kind { Gamma, Lambda, Nakayama };

  Kind kind = Kind::Gamma;
  int p = 0, q = 0;  // cycle lengths (Gamma, Lambda)
  int r = 0;         // Gamma
  int s = 0, t = 0;  // Lambda
  int n = 0, m = 0;  // Nakayama: n vertices, paths of length n*m+1 vanish
  bool swapped = false;  // cycles were exchanged during canonicalization

  static FamilySpec gamma(int p, int q, int r);
  static FamilySpec lambda(int p, int q, int s, int t);
  static FamilySpec nakayama(int n, int m);

  std::string str() const;

  std::tuple<int, int, int, int, int, int, int, int> key() const {
    return {static_cast<int>(kind), p, q, r, s, t, n, m};
  }
  friend bool operator==(const FamilySpec& a, const FamilySpec& b) { return a.key() == b.key(); }
  friend auto operator<=>(const FamilySpec& a, const FamilySpec& b) { return a.key() <=> b.key(); }
};

/// Parses `gamma(p,q,r)`, `lambda(p,q,s,t)`, `nakayama(n,m)`; case-insensitive,
/// whitespace-tolerant. Throws ParseError on bad syntax and InvalidParams on
/// parameters violating the family constraints.
FamilySpec parse_family_spec(std::string_view text);

/// True when `text` looks like a family spec rather than a file name or DSL.
bool looks_like_family_spec(std::string_view text);

}  // namespace ssb
