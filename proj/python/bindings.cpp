// Python bindings for the expression algebra and the two pipeline entry
// points. Expressions round-trip through the same parser as the CLI; exact
// rationals cross the boundary as fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kappamu/cpm.hpp"
#include "kappamu/pipeline.hpp"
#include "kappamu/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace kappamu;

namespace {

py::object to_fraction(const Rational &q) {
  static py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  return fraction(rational_to_string(q));
}

Rational from_py(const py::handle &obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

struct Expr {
  ScalarExpr e;

  std::string str() const { return e.to_string(); }
};

Expr make_expr(const std::string &text,
               const std::vector<std::string> &coords) {
  auto cs = std::make_shared<const CoordSystem>(coords);
  return Expr{parse_expr(text, cs)};
}

std::size_t coord_index(const ScalarExpr &e, const std::string &name) {
  const auto &names = e.coords()->names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return i;
  throw DomainError("unknown coordinate '" + name + "'");
}

py::object eval_expr(const Expr &self, const py::dict &point) {
  const auto &names = self.e.coords()->names();
  RationalPoint p(names.size(), Rational(0));
  for (const auto &item : point) {
    std::size_t i = coord_index(self.e, py::str(item.first).cast<std::string>());
    p[i] = from_py(item.second);
  }
  for (const auto &name : names)
    if (!point.contains(py::str(name)))
      throw EvalError("no value for coordinate '" + name + "'");
  return to_fraction(self.e.eval_at(p));
}

std::pair<int, std::string> verify_file(const std::string &path,
                                        const std::string &format,
                                        bool numeric_fallback,
                                        std::uint64_t seed) {
  VerifyOptions opt;
  opt.numeric_fallback = numeric_fallback;
  opt.seed = seed;
  auto rep = run_verify(load_spec(path), opt);
  if (format == "json")
    return {rep.exit_code, emit_json(rep)};
  if (format == "text")
    return {rep.exit_code, emit_text(rep)};
  throw DomainError("format must be 'text' or 'json'");
}

std::pair<int, std::string> deform_file(const std::string &path,
                                        const py::handle &a,
                                        const std::string &out,
                                        const std::string &format) {
  auto rep = run_deform(load_spec(path), from_py(a), out);
  if (format == "json")
    return {rep.exit_code, emit_deform_json(rep)};
  if (format == "text")
    return {rep.exit_code, emit_deform_text(rep)};
  throw DomainError("format must be 'text' or 'json'");
}

const char *applicability_name(Applicability a) {
  switch (a) {
  case Applicability::Structural:
    return "structural";
  case Applicability::Contact:
    return "contact";
  case Applicability::Nullity:
    return "nullity";
  case Applicability::NullityConstant:
    return "nullity-constant";
  }
  return "?";
}

py::list catalog() {
  py::list out;
  for (const auto &entry : identity_catalog()) {
    py::dict d;
    d["id"] = entry.id;
    d["statement"] = entry.statement;
    d["applicability"] = applicability_name(entry.when);
    out.append(d);
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_kappamu, m) {
  m.doc() = "exact verification engine for contact pseudo-metric structures";

  auto base = py::register_exception<Error>(m, "EngineError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<OverflowError>(m, "ExponentOverflowError", base);
  py::register_exception<EvalError>(m, "EvalError", base);

  py::class_<Expr>(m, "Expr")
      .def("__add__", [](const Expr &a, const Expr &b) { return Expr{a.e + b.e}; })
      .def("__sub__", [](const Expr &a, const Expr &b) { return Expr{a.e - b.e}; })
      .def("__mul__", [](const Expr &a, const Expr &b) { return Expr{a.e * b.e}; })
      .def("__neg__", [](const Expr &a) { return Expr{-a.e}; })
      .def("__pow__", [](const Expr &a, int n) { return Expr{a.e.pow_int(n)}; })
      .def("__eq__", [](const Expr &a, const Expr &b) { return a.e == b.e; })
      .def("__ne__", [](const Expr &a, const Expr &b) { return a.e != b.e; })
      .def("__str__", &Expr::str)
      .def("__repr__", [](const Expr &a) { return "Expr(" + a.str() + ")"; })
      .def_property_readonly("is_zero",
                             [](const Expr &a) { return a.e.is_zero(); })
      .def_property_readonly("coords",
                             [](const Expr &a) { return a.e.coords()->names(); })
      .def(
          "diff",
          [](const Expr &a, const std::string &name) {
            return Expr{a.e.partial_diff(coord_index(a.e, name))};
          },
          py::arg("coord"))
      .def("eval", &eval_expr, py::arg("point"),
           "Evaluate at a {coordinate: Fraction} point; exact arithmetic.")
      .def(
          "divide_exact",
          [](const Expr &a, const Expr &b) -> std::optional<Expr> {
            auto q = ScalarExpr::try_divide_exact(a.e, b.e);
            if (!q)
              return std::nullopt;
            return Expr{*q};
          },
          py::arg("divisor"),
          "Exact quotient, or None when the division does not come out even.");

  m.def("parse", &make_expr, py::arg("text"),
        py::arg("coords") = std::vector<std::string>{"x", "y", "z"},
        "Parse an expression over the named coordinates.");

  m.def("verify_file", &verify_file, py::arg("path"),
        py::arg("format") = "json", py::arg("numeric_fallback") = false,
        py::arg("seed") = 0,
        "Run the full verification pipeline on a .cpm file; returns "
        "(exit_code, report).");

  m.def("deform_file", &deform_file, py::arg("path"), py::arg("a"),
        py::arg("out") = "", py::arg("format") = "json",
        "Apply the D-homothetic deformation with parameter a and check the "
        "transformation law; returns (exit_code, report).");

  m.def("catalog", &catalog,
        "All verdict ids the engine can emit, with statements.");
}
