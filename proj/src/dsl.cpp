#include "ssb/dsl.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ssb/errors.hpp"
#include "ssb/families.hpp"
#include "ssb/hochschild.hpp"
#include "ssb/invariants.hpp"
#include "ssb/scalar.hpp"

namespace ssb {

namespace {

struct Token {
  enum Type { Name, Sym, Arrow, End } type = End;
  std::string text;
  std::size_t line = 1, column = 1;
};

bool name_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      const auto c = static_cast<unsigned char>(s[i]);
      if (c == '\n') {
        ++line;
        col = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col;  // count code points, not bytes
      }
    }
  };
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (name_byte(c)) {
      Token t{Token::Name, {}, line, col};
      std::size_t j = i;
      while (j < s.size() && name_byte(static_cast<unsigned char>(s[j]))) ++j;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back(Token{Token::Arrow, "->", line, col});
      advance(2);
    } else if (std::string_view("{}[]=,:;*+-/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back(Token{Token::Sym, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back(Token{Token::End, {}, line, col});
  return out;
}

bool all_digits(const std::string& s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

[[noreturn]] void invalid(const Token& at, const std::string& what) {
  throw Error(ErrorKind::ValidationError, std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + what);
}

struct RawArrow {
  Token name, from, to;
};

struct RawTerm {
  mpq_class coeff;
  std::vector<Token> arrows;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Presentation run() {
    expect_name("algebra");
    expect("{");
    std::map<std::string, bool> seen;
    while (!is("}")) {
      const Token key = peek();
      if (key.type != Token::Name) fail(key, "expected a field name");
      if (seen[key.text]) fail(key, "duplicate field '" + key.text + "'");
      seen[key.text] = true;
      next();
      expect("=");
      if (key.text == "char") {
        parse_char();
      } else if (key.text == "vertices") {
        list([&] { vertices_.push_back(name("vertex name")); });
      } else if (key.text == "arrows") {
        list([&] {
          RawArrow a;
          a.name = name("arrow name");
          if (std::isdigit(static_cast<unsigned char>(a.name.text[0]))) fail(a.name, "arrow names must not start with a digit");
          expect(":");
          a.from = name("vertex name");
          if (peek().type != Token::Arrow) fail(peek(), "expected '->'");
          next();
          a.to = name("vertex name");
          arrows_.push_back(a);
        });
      } else if (key.text == "relations") {
        list([&] { relations_.push_back(relation()); });
      } else {
        fail(key, "unknown field '" + key.text + "'");
      }
      if (is(";")) next();
    }
    next();
    if (peek().type != Token::End) fail(peek(), "trailing input after '}'");
    if (!seen["vertices"]) fail(peek(), "missing field 'vertices'");
    if (!seen["arrows"]) fail(peek(), "missing field 'arrows'");
    return assemble();
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  void next() { ++pos_; }
  bool is(const char* sym) const { return peek().type == Token::Sym && peek().text == sym; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.column, t.type == Token::End ? what + " (at end of input)" : what);
  }

  void expect(const char* sym) {
    if (!is(sym)) fail(peek(), std::string("expected '") + sym + "'");
    next();
  }
  void expect_name(const char* word) {
    if (peek().type != Token::Name || peek().text != word) fail(peek(), std::string("expected '") + word + "'");
    next();
  }
  Token name(const char* what) {
    if (peek().type != Token::Name) fail(peek(), std::string("expected ") + what);
    Token t = peek();
    next();
    return t;
  }

  template <class F>
  void list(F item) {
    expect("[");
    while (!is("]")) {
      item();
      if (is(",")) {
        next();
      } else if (!is("]")) {
        fail(peek(), "expected ',' or ']'");
      }
    }
    next();
  }

  void parse_char() {
    const Token t = name("a characteristic");
    if (!all_digits(t.text) || t.text.size() > 10) fail(t, "characteristic must be 0 or a prime");
    const auto v = std::stoull(t.text);
    if (v != 0 && (!is_prime(v) || v >= (1ull << 31))) fail(t, "characteristic must be 0 or a prime, got " + t.text);
    char_ = static_cast<std::uint32_t>(v);
  }

  std::vector<RawTerm> relation() {
    std::vector<RawTerm> out;
    int sign = 1;
    if (is("-") || is("+")) {
      sign = is("-") ? -1 : 1;
      next();
    }
    for (;;) {
      out.push_back(term(sign));
      if (is("+") || is("-")) {
        sign = is("-") ? -1 : 1;
        next();
      } else {
        return out;
      }
    }
  }

  RawTerm term(int sign) {
    RawTerm t;
    t.coeff = sign;
    if (peek().type == Token::Name && all_digits(peek().text)) {
      const Token num = peek();
      next();
      mpq_class c(mpz_class(num.text));
      if (is("/")) {
        next();
        const Token den = name("a denominator");
        if (!all_digits(den.text)) fail(den, "expected a denominator");
        const mpz_class d(den.text);
        if (d == 0) fail(den, "zero denominator");
        c /= d;
      }
      t.coeff *= c;
      expect("*");
    }
    t.arrows.push_back(name("an arrow"));
    while (is("*")) {
      next();
      t.arrows.push_back(name("an arrow"));
    }
    return t;
  }

  Presentation assemble() const {
    Presentation pres;
    pres.characteristic = char_;
    auto& Q = pres.quiver;
    for (const auto& v : vertices_) {
      if (Q.find_vertex(v.text)) invalid(v, "duplicate vertex '" + v.text + "'");
      Q.vertices.push_back(v.text);
    }
    auto vertex = [&](const Token& t) {
      auto v = Q.find_vertex(t.text);
      if (!v) invalid(t, "arrow refers to undeclared vertex '" + t.text + "'");
      return *v;
    };
    for (const auto& a : arrows_) {
      if (Q.find_arrow(a.name.text)) invalid(a.name, "duplicate arrow '" + a.name.text + "'");
      Q.arrows.push_back(Arrow{a.name.text, vertex(a.from), vertex(a.to)});
    }
    if (Q.vertices.empty()) invalid(peek(), "no vertices");
    if (Q.num_vertices() > 1) {
      std::vector<bool> touched(Q.num_vertices());
      for (const auto& a : Q.arrows) touched[a.origin] = touched[a.terminus] = true;
      for (std::size_t v = 0; v < touched.size(); ++v) {
        if (!touched[v]) invalid(vertices_[v], "dangling vertex '" + Q.vertices[v] + "'");
      }
      if (!Q.connected()) invalid(vertices_.front(), "quiver is not connected");
    }
    for (const auto& raw : relations_) {
      Relation rel;
      for (const auto& rt : raw) {
        Word w;
        for (const auto& a : rt.arrows) {
          auto idx = Q.find_arrow(a.text);
          if (!idx) invalid(a, "unknown arrow '" + a.text + "'");
          w += static_cast<char16_t>(*idx);
        }
        auto path = make_path(Q, w);
        if (!path) invalid(rt.arrows.front(), "arrows do not compose");
        if (path->length() < 2) invalid(rt.arrows.front(), "relation term of length 1 (not admissible)");
        if (!rel.empty() && (path->origin != rel.front().path.origin || path->terminus != rel.front().path.terminus)) {
          invalid(rt.arrows.front(), "terms of a relation must start and end at the same vertices");
        }
        if (char_ != 0 && mpz_class(rt.coeff.get_den() % char_) == 0) {
          invalid(rt.arrows.front(), "coefficient denominator vanishes in characteristic " + std::to_string(char_));
        }
        rel.push_back(Term{rt.coeff, *path});
      }
      pres.relations.push_back(std::move(rel));
    }
    return pres;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::uint32_t char_ = 0;
  std::vector<Token> vertices_;
  std::vector<RawArrow> arrows_;
  std::vector<std::vector<RawTerm>> relations_;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

std::string emit_presentation(const Presentation& pres) {
  std::ostringstream os;
  const auto& Q = pres.quiver;
  os << "algebra {\n  char = " << pres.characteristic << "\n  vertices = [";
  for (std::size_t v = 0; v < Q.num_vertices(); ++v) os << (v ? ", " : "") << Q.vertices[v];
  os << "]\n  arrows = [";
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const auto& ar = Q.arrows[a];
    os << (a ? ", " : "") << ar.name << ": " << Q.vertices[ar.origin] << " -> " << Q.vertices[ar.terminus];
  }
  os << "]\n  relations = [";
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << pres.relation_string(pres.relations[i]);
  }
  os << (pres.relations.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.characteristic != b.characteristic || a.quiver.vertices != b.quiver.vertices) return false;
  if (a.quiver.num_arrows() != b.quiver.num_arrows() || a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.quiver.num_arrows(); ++i) {
    const auto &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
    if (x.name != y.name || x.origin != y.origin || x.terminus != y.terminus) return false;
  }
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto &r = a.relations[i], &s = b.relations[i];
    if (r.size() != s.size()) return false;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].coeff != s[k].coeff || !(r[k].path == s[k].path)) return false;
    }
  }
  return true;
}

Presentation load_source(const std::string& src, std::optional<std::uint32_t> ch) {
  if (looks_like_family_spec(src)) return presentation(parse_family_spec(src), ch.value_or(0));
  std::string text;
  if (src.find('{') != std::string::npos) {
    text = src;
  } else {
    std::ifstream in(src);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + src + "' (not a file or family spec)");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto pres = parse_presentation(text);
  if (ch) {
    check_characteristic(*ch);
    pres.characteristic = *ch;
  }
  return pres;
}

nlohmann::json invariants_report(const FiniteAlgebra& A, const ReportOptions& opts) {
  nlohmann::json j;
  const auto& pres = A.presentation();
  j["spec"] = pres.family ? pres.family->str() : "custom";
  j["char"] = A.characteristic();
  j["dimension"] = A.dim();
  const auto C = cartan_matrix(A);
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < C.rows; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t k = 0; k < C.cols; ++k) row.push_back(C(i, k).get_si());
    rows.push_back(row);
  }
  j["cartan"] = rows;
  auto inv = nlohmann::json::array();
  for (const auto& d : cartan_invariants(A)) inv.push_back(d.get_si());
  j["cartan_invariants"] = inv;
  j["cartan_det"] = cartan_determinant(A).get_si();
  const auto Z = centre(A);
  j["centre_dim"] = Z.dim();

  if (opts.hh_max_degree >= 0) {
    nlohmann::json hh = nlohmann::json::object();
    const int top = std::min(opts.hh_max_degree, has_gamma_resolution(A) ? max_stage(A) - 1 : 1);
    for (const auto& [deg, d] : hh_table(A, top)) hh[std::to_string(deg)] = d;
    j["hh"] = hh;
  }
  if (opts.kulshammer && A.characteristic() != 0) {
    try {
      const auto perp = kulshammer_perp(A, 1);
      j["kulshammer"] = {{"commutator_dim", commutator_subspace(A).dim()},
                         {"t1_perp_dim", perp.dim()},
                         {"quotient_profile", quotient_radical_profile(A, Z, perp)}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSymmetric) throw;
    }
  }
  return j;
}

std::string to_dot(const Presentation& pres) {
  const auto& Q = pres.quiver;
  std::ostringstream os;
  os << "digraph " << quoted(pres.family ? pres.family->str() : "Q") << " {\n";
  for (const auto& v : Q.vertices) os << "  " << quoted(v) << " [label=" << quoted(v) << "];\n";
  for (const auto& a : Q.arrows) {
    os << "  " << quoted(Q.vertices[a.origin]) << " -> " << quoted(Q.vertices[a.terminus])
       << " [label=" << quoted(a.name) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ssb
