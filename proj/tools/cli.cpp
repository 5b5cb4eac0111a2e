#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssb/acceptance.hpp"
#include "ssb/classify.hpp"
#include "ssb/dsl.hpp"
#include "ssb/errors.hpp"
#include "ssb/families.hpp"
#include "ssb/hochschild.hpp"

namespace ssb {

namespace {

using nlohmann::json;

struct Common {
  std::optional<std::uint32_t> ch;
  bool json = false;
  bool dot = false;
  bool audit = false;
  std::optional<std::size_t> len_bound;
};

// bad input from the user, as opposed to a failed computation
bool usage_kind(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::ValidationError || k == ErrorKind::InvalidParams;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void print_flat(std::ostream& out, const json& j) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) out << k << "." << k2 << ": " << v2.dump() << '\n';
    } else {
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

int cmd_build(const std::string& src, bool emit, const Common& c, std::ostream& out) {
  const auto pres = load_source(src, c.ch);
  if (c.dot) {
    out << to_dot(pres);
    return 0;
  }
  if (emit) {
    out << emit_presentation(pres);
    return 0;
  }
  const auto A = FiniteAlgebra::build(pres);
  const auto rep = validate_structure(A);
  json j;
  j["spec"] = pres.family ? pres.family->str() : "custom";
  j["char"] = A.characteristic();
  j["vertices"] = A.num_vertices();
  j["arrows"] = A.quiver().num_arrows();
  j["relations"] = pres.relations.size();
  j["dimension"] = A.dim();
  j["rules"] = A.rewriting().rules().size();
  auto proj = json::array();
  for (const auto& p : A.projective_structure()) {
    proj.push_back({{"vertex", A.quiver().vertices[p.vertex]}, {"uniserial", p.uniserial}, {"radical_layers", p.radical_layers}});
  }
  j["projectives"] = proj;
  j["structure"] = {{"special_biserial", rep.special_biserial},
                    {"weakly_symmetric", rep.weakly_symmetric},
                    {"symmetric_form_ok", rep.symmetric_form_ok},
                    {"arrow_degrees_ok", rep.arrow_degrees_ok},
                    {"nonuniserial_count", rep.nonuniserial_count}};
  if (c.json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "spec: " << j["spec"].get<std::string>() << "\nchar: " << A.characteristic() << "\nquiver: " << A.num_vertices()
      << " vertices, " << A.quiver().num_arrows() << " arrows, " << pres.relations.size() << " relations\n"
      << "dimension: " << A.dim() << " (" << j["rules"] << " rewriting rules)\n";
  for (const auto& p : j["projectives"]) {
    out << "  P_" << p["vertex"].get<std::string>() << ": radical layers " << p["radical_layers"].dump()
        << (p["uniserial"].get<bool>() ? "" : " (not uniserial)") << '\n';
  }
  out << "special biserial: " << yes(rep.special_biserial) << "\nweakly symmetric: " << yes(rep.weakly_symmetric)
      << "\nsymmetric form: " << yes(rep.symmetric_form_ok) << "\nunique successor/predecessor: "
      << yes(rep.arrow_degrees_ok) << "\nnon-uniserial projectives: " << rep.nonuniserial_count << '\n';
  return 0;
}

int cmd_invariants(const std::string& src, const Common& c, std::ostream& out) {
  const auto pres = load_source(src, c.ch);
  if (c.dot) {
    out << to_dot(pres);
    return 0;
  }
  const auto j = invariants_report(FiniteAlgebra::build(pres));
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    print_flat(out, j);
  }
  return 0;
}

int cmd_hh(const std::string& src, int max_degree, const Common& c, std::ostream& out) {
  const auto pres = load_source(src, c.ch);
  const auto A = FiniteAlgebra::build(pres);
  json j;
  j["spec"] = pres.family ? pres.family->str() : "custom";
  j["char"] = A.characteristic();
  j["hh"] = json::object();
  for (const auto& [deg, d] : hh_table(A, max_degree)) j["hh"][std::to_string(deg)] = d;
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [deg, d] : j["hh"].items()) out << "dim HH^" << deg << " = " << d << '\n';
  }
  return 0;
}

json value_json(const InvariantValue& v) {
  return {{"invariant", invariant_name(v.kind, v.degree)}, {"left", v.left}, {"right", v.right}};
}

int cmd_classify(const std::string& rel, const std::string& a, const std::string& b, const Common& c,
                 std::ostream& out) {
  for (const auto* s : {&a, &b}) {
    if (!looks_like_family_spec(*s)) {
      throw Error(ErrorKind::ParseError, "classify takes family specs, got '" + *s + "'");
    }
  }
  const auto x = parse_family_spec(a), y = parse_family_spec(b);
  const std::uint32_t ch = c.ch.value_or(0);
  EquivalenceVerdict v;
  if (rel == "derived") {
    v = derived_equivalent(x, y, ch);
  } else if (rel == "stable") {
    v = stably_equivalent_morita(x, y, ch);
  } else {
    v = isomorphic(x, y, ch);
  }
  std::optional<AuditReport> rep;
  if (c.audit) rep = audit(v);

  json j;
  j["relation"] = std::string(to_string(v.relation));
  j["char"] = ch;
  j["left"] = v.left.str();
  j["right"] = v.right.str();
  j["left_form"] = v.left_form.str();
  j["right_form"] = v.right_form.str();
  j["equivalent"] = v.equivalent;
  j["verdict"] = v.equivalent ? "equivalent" : "inequivalent";
  j["trace"] = json::array();
  for (const auto& t : v.trace) j["trace"].push_back(value_json(t));
  if (v.separator) j["separator"] = value_json(*v.separator);
  j["cited"] = json::array();
  for (const auto& key : v.cited) {
    const auto& f = cited_fact(key);
    j["cited"].push_back({{"key", f.key}, {"statement", f.statement}, {"citation", f.citation}});
  }
  j["summary"] = v.summary;
  if (rep) {
    j["audit"] = {{"ok", rep->ok}, {"lines", json::array()}};
    for (const auto& l : rep->lines) {
      j["audit"]["lines"].push_back({{"invariant", invariant_name(l.expected.kind, l.expected.degree)},
                                     {"expected", {l.expected.left, l.expected.right}},
                                     {"computed", {l.left, l.right}},
                                     {"ok", l.ok}});
    }
  }

  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << to_string(v.relation) << ": " << v.left.str() << " vs " << v.right.str() << ", char " << ch << '\n'
        << (v.equivalent ? "equivalent" : "inequivalent") << '\n';
    if (v.relation != EquivalenceKind::Isomorphic) {
      out << "normal forms: " << v.left_form.str() << " / " << v.right_form.str() << '\n';
    }
    for (const auto& t : v.trace) {
      out << "  " << invariant_name(t.kind, t.degree) << ": " << t.left << " vs " << t.right << '\n';
    }
    if (v.separator) {
      out << "separator: " << invariant_name(v.separator->kind, v.separator->degree) << " " << v.separator->left
          << " vs " << v.separator->right << '\n';
    }
    for (const auto& key : v.cited) {
      const auto& f = cited_fact(key);
      out << "cited [" << f.key << "]: " << f.statement << " (" << f.citation << ")\n";
    }
    if (rep) {
      for (const auto& l : rep->lines) {
        out << "audit " << invariant_name(l.expected.kind, l.expected.degree) << ": recomputed " << l.left << " vs "
            << l.right << (l.ok ? " ok" : " MISMATCH") << '\n';
      }
      out << "audit: " << (rep->ok ? "ok" : "FAILED") << '\n';
    }
  }
  return rep && !rep->ok ? 1 : 0;
}

int cmd_verify(int max, const std::vector<std::uint32_t>& chars, const Common& c, std::ostream& out) {
  SuiteOptions opts;
  opts.max = max;
  if (!chars.empty()) opts.chars = chars;
  const auto results = run_suite(opts);
  const int code = suite_exit_code(results);
  if (c.json) {
    json j = json::array();
    for (const auto& r : results) {
      json m = json::array();
      for (const auto& x : r.mismatches) m.push_back({{"point", x.point}, {"detail", x.detail}, {"documented", x.known}});
      j.push_back({{"criterion", r.id}, {"title", r.title}, {"checks", r.points}, {"pass", r.pass()}, {"mismatches", m}});
    }
    out << json{{"criteria", j}, {"ok", code == 0}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) out << r.line() << '\n';
    out << (code == 0 ? "paper-suite: OK" : "paper-suite: FAILED") << '\n';
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for symmetric special biserial algebras", "ssb"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--char", c.ch, "characteristic (0 or a prime)");
  app.add_flag("--json", c.json, "emit JSON");
  app.add_flag("--dot", c.dot, "emit the quiver as DOT (build, invariants)");
  app.add_flag("--audit", c.audit, "recompute the traced invariants from the built algebras (classify)");
  app.add_option("--len-bound", c.len_bound, "rewriting length bound (also SSB_LEN_BOUND)");

  std::string src, rel, a, b, suite;
  bool emit = false;
  int max_degree = 1, max = 4;
  std::vector<std::uint32_t> chars;

  auto* build = app.add_subcommand("build", "build an algebra and check its structure");
  build->add_option("src", src, "family spec, file, or inline document")->required();
  build->add_flag("--emit", emit, "print the presentation as a document");
  auto* inv = app.add_subcommand("invariants", "Cartan data, centre, HH^0..1, Külshammer data");
  inv->add_option("src", src)->required();
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions");
  hh->add_option("src", src)->required();
  hh->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  auto* cls = app.add_subcommand("classify", "compare two family specs");
  cls->add_option("relation", rel)->required()->check(CLI::IsMember({"derived", "stable", "iso"}));
  cls->add_option("a", a)->required();
  cls->add_option("b", b)->required();
  auto* ver = app.add_subcommand("verify", "run the acceptance grid");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember({"paper-suite"}));
  ver->add_option("--max", max)->check(CLI::Range(1, 4));
  ver->add_option("--chars", chars)->delimiter(',');

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c.len_bound) setenv("SSB_LEN_BOUND", std::to_string(*c.len_bound).c_str(), 1);
    if (*build) return cmd_build(src, emit, c, out);
    if (*inv) return cmd_invariants(src, c, out);
    if (*hh) return cmd_hh(src, max_degree, c, out);
    if (*cls) return cmd_classify(rel, a, b, c, out);
    return cmd_verify(max, chars, c, out);
  } catch (const Error& e) {
    err << "ssb: " << e.what() << '\n';
    return usage_kind(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "ssb: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ssb
