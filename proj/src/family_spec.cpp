#include "ssb/family_spec.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "ssb/errors.hpp"

namespace ssb {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParams, what); }

void require_positive(std::initializer_list<int> xs, const char* family) {
  for (int x : xs) {
    if (x < 1) invalid(std::string(family) + " parameters must be positive");
  }
}

}  // namespace

FamilySpec FamilySpec::gamma(int p, int q, int r) {
  require_positive({p, q, r}, "gamma");
  FamilySpec f;
  f.kind = Kind::Gamma;
  f.swapped = p > q;
  f.p = std::min(p, q);
  f.q = std::max(p, q);
  f.r = r;
  return f;
}

FamilySpec FamilySpec::lambda(int p, int q, int s, int t) {
  require_positive({p, q, s, t}, "lambda");
  FamilySpec f;
  f.kind = Kind::Lambda;
  if (p > q) {
    std::swap(p, q);
    std::swap(s, t);
    f.swapped = true;
  }
  if (p == q && s > t) std::swap(s, t);
  if (p == 1 && s < 2) invalid("lambda: p = 1 requires s >= 2");
  if (q == 1 && (s < 2 || t < 2)) invalid("lambda: q = 1 requires s >= 2 and t >= 2");
  f.p = p;
  f.q = q;
  f.s = s;
  f.t = t;
  return f;
}

FamilySpec FamilySpec::nakayama(int n, int m) {
  require_positive({n, m}, "nakayama");
  FamilySpec f;
  f.kind = Kind::Nakayama;
  f.n = n;
  f.m = m;
  return f;
}

std::string FamilySpec::str() const {
  auto s_ = [](int x) { return std::to_string(x); };
  switch (kind) {
    case Kind::Gamma: return "gamma(" + s_(p) + "," + s_(q) + "," + s_(r) + ")";
    case Kind::Lambda:
      return "lambda(" + s_(p) + "," + s_(q) + "," + s_(s) + "," + s_(t) + ")";
    case Kind::Nakayama: return "nakayama(" + s_(n) + "," + s_(m) + ")";
  }
  return {};
}

bool looks_like_family_spec(std::string_view text) {
  std::string lower;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) lower += static_cast<char>(std::tolower(c));
  }
  for (const char* prefix : {"gamma(", "lambda(", "nakayama("}) {
    if (lower.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

FamilySpec parse_family_spec(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(1, pos + 1, "family spec: " + what);
  };
  skip_ws();
  std::string name;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
    name += static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos++])));
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
  ++pos;
  std::vector<int> args;
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected a positive integer");
    if (pos - start > 6) throw fail("parameter too large");
    args.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    throw fail("expected ',' or ')'");
  }
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters");

  auto arity = [&](std::size_t k) {
    if (args.size() != k) {
      throw ParseError(1, 1, name + " expects " + std::to_string(k) + " parameters");
    }
  };
  if (name == "gamma") {
    arity(3);
    return FamilySpec::gamma(args[0], args[1], args[2]);
  }
  if (name == "lambda") {
    arity(4);
    return FamilySpec::lambda(args[0], args[1], args[2], args[3]);
  }
  if (name == "nakayama") {
    arity(2);
    return FamilySpec::nakayama(args[0], args[1]);
  }
  throw ParseError(1, 1, "unknown family '" + name + "'");
}

}  // namespace ssb
