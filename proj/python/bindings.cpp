#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toag/axioms.hpp"
#include "toag/cli.hpp"
#include "toag/error.hpp"
#include "toag/extension.hpp"
#include "toag/presburger.hpp"
#include "toag/truncation.hpp"
#include "toag/valuation.hpp"

namespace py = pybind11;
using namespace toag;

namespace {

TruncStructure structure(const std::string& spec) {
  if (auto builtin = parse_builtin_spec(spec)) return *builtin;
  return load_finite_table(spec);
}

std::vector<std::string> lines(const std::vector<AxiomReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(r.render());
  return out;
}

PElement p_element(const Extension& p, py::tuple t) {
  return p.make(Integer(t[0].cast<std::int64_t>()), p.base().parse_element(t[1].cast<std::string>()));
}

py::tuple p_tuple(const PElement& e) {
  return py::make_tuple(e.k.convert_to<std::int64_t>(), e.x.to_string());
}

}  // namespace

PYBIND11_MODULE(_toag, m) {
  m.doc() = "Truncated ordered abelian groups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<MixedInstanceError>(m, "MixedInstanceError", PyExc_TypeError);

  py::class_<TruncStructure>(m, "Structure")
      .def(py::init(&structure), py::arg("spec"), "Builtin spec such as 'Z:tau=7' or TOAG1 text")
      .def("describe", &TruncStructure::describe)
      .def("is_finite", &TruncStructure::is_finite)
      .def("tau", [](const TruncStructure& t) { return t.tau().to_string(); })
      .def("elements",
           [](const TruncStructure& t) {
             std::vector<std::string> out;
             for (const auto& x : t.elements()) out.push_back(x.to_string());
             return out;
           })
      .def("add",
           [](const TruncStructure& t, const std::string& x, const std::string& y) {
             return t.add(t.parse_element(x), t.parse_element(y)).to_string();
           })
      .def("dotminus",
           [](const TruncStructure& t, const std::string& y, const std::string& x) -> std::optional<std::string> {
             auto r = t.try_dotminus(t.parse_element(y), t.parse_element(x));
             if (!r) return std::nullopt;
             return r->to_string();
           })
      .def("tau_dotminus", [](const TruncStructure& t, const std::string& x) {
        return t.tau_dotminus(t.parse_element(x)).to_string();
      });

  m.def(
      "check_axioms",
      [](const TruncStructure& t, std::uint64_t budget, std::uint64_t seed) {
        CheckOptions o;
        o.budget = budget;
        o.seed = seed;
        auto out = lines(check_axioms(t, o));
        for (auto& l : lines(check_lemmas(t, o))) out.push_back(std::move(l));
        return out;
      },
      py::arg("structure"), py::arg("budget") = 100000, py::arg("seed") = 0,
      "Report lines for Axioms 1-16 followed by the lemmas");

  m.def(
      "p_add",
      [](const TruncStructure& t, py::tuple a, py::tuple b) {
        Extension p(t);
        return p_tuple(p.add(p_element(p, a), p_element(p, b)));
      },
      py::arg("structure"), py::arg("a"), py::arg("b"), "Sum of (k, x) pairs in the extension monoid");
  m.def(
      "p_cancel_witness",
      [](const TruncStructure& t, py::tuple a, py::tuple b) {
        Extension p(t);
        return p_tuple(p.cancel_witness(p_element(p, a), p_element(p, b)));
      },
      py::arg("structure"), py::arg("a"), py::arg("b"));
  m.def(
      "verify_extension",
      [](const TruncStructure& t, std::uint64_t kmax, std::uint64_t seed) {
        ExtensionOptions o;
        o.kmax = kmax;
        o.seed = seed;
        std::vector<std::string> out{verify_embedding(t, o).render()};
        for (const auto& law : verify_p_laws(t, o).laws) out.push_back(law.render());
        return out;
      },
      py::arg("structure"), py::arg("kmax") = 3, py::arg("seed") = 0);

  m.def(
      "is_presburger",
      [](const TruncStructure& t, std::int64_t n_max) {
        PresburgerOptions o;
        o.n_max = n_max;
        return is_presburger_toag(t, o).verdict == Verdict::pass;
      },
      py::arg("structure"), py::arg("n_max") = 30);
  m.def(
      "type_signature",
      [](const TruncStructure& t, std::int64_t n_max) {
        PresburgerOptions o;
        o.n_max = n_max;
        auto sig = type_signature(t, o);
        py::object value = py::none();
        if (sig.finite_value) value = py::int_(sig.finite_value->convert_to<std::int64_t>());
        return py::make_tuple(sig.standard, value, sig.residues);
      },
      py::arg("structure"), py::arg("n_max") = 30, "(standard, value or None, {n: residue})");
  m.def(
      "elementarily_equivalent",
      [](const TruncStructure& a, const TruncStructure& b, std::int64_t n_max) {
        PresburgerOptions o;
        o.n_max = n_max;
        return elementarily_equivalent(a, b, o).equivalent;
      },
      py::arg("a"), py::arg("b"), py::arg("n_max") = 30);

  m.def(
      "enumerate_toags",
      [](std::size_t size, const std::string& require, const std::string& negate) {
        SearchSpec spec;
        spec.size = size;
        spec.required = parse_axiom_set(require);
        spec.negated = parse_axiom_set(negate);
        std::vector<std::string> out;
        for (const auto& t : enumerate_toags(spec).tables) out.push_back(t.to_text());
        return out;
      },
      py::arg("size"), py::arg("require") = "none", py::arg("negate") = "none", "TOAG1 texts of all matches");

  m.def(
      "truncated_valuation",
      [](std::int64_t p, std::int64_t k, std::int64_t x) { return truncated_valuation(ResidueRing(p, k), x); },
      py::arg("p"), py::arg("k"), py::arg("x"));
  m.def(
      "valuation_laws_hold",
      [](std::int64_t p, std::int64_t k) { return check_valuation_laws(ResidueRing(p, k)).all_pass(); },
      py::arg("p"), py::arg("k"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process: (exit code, stdout, stderr)");
}
