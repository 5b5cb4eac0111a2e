#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssb/acceptance.hpp"
#include "ssb/classify.hpp"
#include "ssb/dsl.hpp"
#include "ssb/errors.hpp"
#include "ssb/families.hpp"
#include "ssb/hochschild.hpp"

namespace py = pybind11;
using namespace ssb;

namespace {

// JSON goes across as text; the Python side parses it
std::string report(const FiniteAlgebra& A, int hh_max_degree) {
  ReportOptions o;
  o.hh_max_degree = hh_max_degree;
  return invariants_report(A, o).dump();
}

py::tuple value_tuple(const InvariantValue& v) {
  return py::make_tuple(invariant_name(v.kind, v.degree), v.left, v.right);
}

py::dict verdict_dict(const EquivalenceVerdict& v) {
  py::dict d;
  d["relation"] = std::string(to_string(v.relation));
  d["char"] = v.characteristic;
  d["equivalent"] = v.equivalent;
  d["left_form"] = v.left_form.str();
  d["right_form"] = v.right_form.str();
  py::list trace;
  for (const auto& t : v.trace) trace.append(value_tuple(t));
  d["trace"] = trace;
  d["separator"] = v.separator ? py::object(value_tuple(*v.separator)) : py::none();
  d["cited"] = v.cited;
  d["summary"] = v.summary;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "symmetric special biserial algebras: engine, invariants, classification";

  // the message starts with the error kind, e.g. "ParseError: 1:5: ..."
  py::register_exception<Error>(m, "SSBError");

  py::class_<FiniteAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &FiniteAlgebra::dim)
      .def_property_readonly("characteristic", &FiniteAlgebra::characteristic)
      .def_property_readonly("num_vertices", &FiniteAlgebra::num_vertices)
      .def_property_readonly("spec", [](const FiniteAlgebra& A) {
        const auto& f = A.presentation().family;
        return f ? f->str() : std::string("custom");
      })
      .def("basis", [](const FiniteAlgebra& A) {
        std::vector<std::string> out;
        for (const auto& p : A.basis()) out.push_back(path_name(A.quiver(), p));
        return out;
      })
      .def("hh_dim", [](const FiniteAlgebra& A, int n) { return hh_dim(A, n); }, py::arg("degree"))
      .def("_report", &report, py::arg("hh_max_degree") = 1)
      .def("__repr__", [](const FiniteAlgebra& A) {
        const auto& f = A.presentation().family;
        return "<Algebra " + (f ? f->str() : std::string("custom")) + " char " + std::to_string(A.characteristic()) +
               " dim " + std::to_string(A.dim()) + ">";
      });

  m.def(
      "build",
      [](const std::string& src, std::optional<std::uint32_t> ch) { return FiniteAlgebra::build(load_source(src, ch)); },
      py::arg("source"), py::arg("char") = py::none(),
      "Build from a family spec such as 'gamma(2,3,1)', a file, or an inline document.");
  m.def(
      "emit", [](const std::string& src, std::optional<std::uint32_t> ch) { return emit_presentation(load_source(src, ch)); },
      py::arg("source"), py::arg("char") = py::none());
  m.def("dot", [](const std::string& src) { return to_dot(load_source(src)); }, py::arg("source"));
  m.def("canonical_spec", [](const std::string& s) { return parse_family_spec(s).str(); }, py::arg("spec"));

  m.def(
      "classify",
      [](const std::string& relation, const std::string& a, const std::string& b, std::uint32_t ch) {
        const auto x = parse_family_spec(a), y = parse_family_spec(b);
        if (relation == "derived") return verdict_dict(derived_equivalent(x, y, ch));
        if (relation == "stable") return verdict_dict(stably_equivalent_morita(x, y, ch));
        if (relation == "iso") return verdict_dict(isomorphic(x, y, ch));
        throw Error(ErrorKind::InvalidParams, "relation must be derived, stable or iso");
      },
      py::arg("relation"), py::arg("a"), py::arg("b"), py::arg("char") = 0);
  m.def(
      "derived_normal_form", [](const std::string& s, std::uint32_t ch) { return derived_normal_form(parse_family_spec(s), ch).str(); },
      py::arg("spec"), py::arg("char") = 0);
  m.def(
      "verify_explicit_iso",
      [](std::uint32_t ch) {
        const auto r = verify_explicit_iso(ch);
        py::dict d;
        d["epsilon"] = r.epsilon;
        d["relations_ok"] = r.relations_ok;
        d["invertible"] = r.invertible;
        return d;
      },
      py::arg("char"));
  m.def(
      "run_suite",
      [](int max, std::optional<std::vector<std::uint32_t>> chars, std::vector<int> only) {
        SuiteOptions o;
        o.max = max;
        o.chars = chars;
        o.only.insert(only.begin(), only.end());
        std::vector<CriterionResult> res;
        {
          py::gil_scoped_release release;
          res = run_suite(o);
        }
        py::list out;
        for (const auto& r : res) {
          py::dict d;
          d["criterion"] = r.id;
          d["title"] = r.title;
          d["checks"] = r.points;
          d["pass"] = r.pass();
          d["documented_only"] = r.only_known();
          d["line"] = r.line();
          out.append(d);
        }
        return out;
      },
      py::arg("max") = 4, py::arg("chars") = py::none(), py::arg("only") = std::vector<int>{});
}
