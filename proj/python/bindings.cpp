#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "popswitch/jw.hpp"
#include "popswitch/karoubi.hpp"
#include "popswitch/qarith.hpp"
#include "popswitch/suites.hpp"
#include "popswitch/tldiag.hpp"

namespace py = pybind11;
using namespace popswitch;

namespace {

Relations parse_relations(const std::string& name) {
  if (name == "pop-switch") return Relations::kPopSwitch;
  if (name == "loop-values") return Relations::kLoopValues;
  throw py::value_error("relations must be 'pop-switch' or 'loop-values'");
}

Convention parse_convention(const std::string& name) {
  if (name == "ccw") return Convention::kCounterclockwiseIsQ;
  if (name == "cw") return Convention::kClockwiseIsQ;
  throw py::value_error("convention must be 'ccw' or 'cw'");
}

py::dict suite_to_dict(const SuiteReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["id"] = c.id;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    checks.append(d);
  }
  py::dict out;
  out["suite"] = r.suite;
  out["passed"] = r.passed();
  out["checks"] = checks;
  out["text"] = r.to_text();
  return out;
}

}  // namespace

PYBIND11_MODULE(_popswitch, m) {
  m.doc() = "Exact Temperley-Lieb, Jones-Wenzl and oriented-strand computations";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def(
      "quantum_int", [](int n) { return quantum_int(n).to_string(); }, py::arg("n"), "[n] as text.");
  m.def(
      "quantum_binom", [](int n, int k) { return quantum_binom(n, k).to_string(); }, py::arg("n"), py::arg("k"),
      "The quantum binomial [n choose k] as text.");
  m.def(
      "quantum_int_at",
      [](int n, const std::string& q0) { return lp_eval(quantum_int(n), parse_rational(q0)).get_str(); },
      py::arg("n"), py::arg("q0"), "[n] evaluated at a rational point, as 'a/b' text.");
  m.def("verify_lemma_q", [](int k, int l) { return verify_lemma_q(k, l); }, py::arg("k"), py::arg("l"));
  m.def("verify_cor_q", [](int k, int l) { return verify_cor_q(k, l); }, py::arg("k"), py::arg("l"));

  m.def(
      "catalan", [](int n) { return py::int_(py::str(catalan(n).get_str())); }, py::arg("n"));
  m.def(
      "basis_size", [](int bottom, int top) { return enumerate_basis(bottom, top).size(); }, py::arg("bottom"),
      py::arg("top"));

  m.def(
      "jones_wenzl", [](int n) { return jones_wenzl(n).element.to_string(); }, py::arg("n"),
      "p_n as text, one term per diagram.");
  m.def(
      "jw_properties",
      [](int n) {
        const JwReport r = check_jw_properties(jones_wenzl(n).element);
        py::dict d;
        d["nonzero"] = r.nonzero;
        d["idempotent"] = r.idempotent;
        d["left_uncappable"] = r.left_uncappable;
        d["right_uncappable"] = r.right_uncappable;
        return d;
      },
      py::arg("n"));
  m.def(
      "jw_trace", [](int n) { return close_trace(jones_wenzl(n).element).to_string(); }, py::arg("n"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite, std::optional<int> max_n) {
        SuiteOptions options;
        options.max_n = max_n;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, options);
        }
        return suite_to_dict(r);
      },
      py::arg("suite"), py::arg("max_n") = py::none());

  m.def(
      "decompose",
      [](int n, const std::string& relations, const std::string& convention) {
        KaroubiOptions options;
        options.relations = parse_relations(relations);
        options.convention = parse_convention(convention);
        DecompositionSearch s;
        {
          py::gil_scoped_release release;
          s = decompose_jw(n, options);
        }
        py::dict d;
        d["n"] = n;
        d["found"] = s.found.has_value();
        d["subsets_tried"] = s.subsets_tried;
        if (!s.found) {
          d["reason"] = s.last_reason;
          return d;
        }
        std::vector<std::string> signatures;
        for (const auto& sig : s.found->signatures) signatures.push_back(sig.to_string());
        d["signatures"] = signatures;
        d["verified"] = revalidate(s.found->certificate).ok;
        d["closure_sum"] = s.found->closure_total.to_string();
        d["certificate"] = serialize(*s.found);
        return d;
      },
      py::arg("n"), py::arg("relations") = "pop-switch", py::arg("convention") = "ccw",
      "Split lift(p_n) into n+1 strand objects and return the certificate.");
}
