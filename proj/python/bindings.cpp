#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polygcd/analysis.hpp"
#include "polygcd/errors.hpp"
#include "polygcd/linalg.hpp"
#include "polygcd/modp.hpp"
#include "polygcd/serialize.hpp"
#include "polygcd/snf.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string text = v.get_str(10);
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace polygcd;

using Rows = std::vector<std::vector<Integer>>;

Rows to_rows(const IntMatrix& m) {
  Rows out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

py::object json_to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "gcd(f(n), g(n)) atlas for monic integer polynomials";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantBreach>(m, "InvariantBreach", PyExc_RuntimeError);

  m.def("parse_poly", [](const std::string& text) { return parse_poly(text).coeffs(); },
        py::arg("text"), "Coefficients of the expanded polynomial, leading first.");

  m.def("resultant",
        [](const std::string& f, const std::string& g, bool verify) {
          return resultant(parse_monic(f), parse_monic(g), verify);
        },
        py::arg("f"), py::arg("g"), py::arg("verify") = false);

  m.def("analyze",
        [](const std::string& f, const std::string& g, bool verify, std::size_t residue_cap,
           std::uint64_t brute_force_cap) {
          const MonicIntPoly F = parse_monic(f), G = parse_monic(g);
          AnalysisOptions options;
          options.verify = verify;
          options.residue_cap = residue_cap;
          options.brute_force_cap = brute_force_cap;
          return json_to_python(to_json(F, G, analyze(F, G, options)));
        },
        py::arg("f"), py::arg("g"), py::arg("verify") = false,
        py::arg("residue_cap") = kDefaultResidueCap,
        py::arg("brute_force_cap") = kDefaultBruteForceCap,
        "Analysis document as a dict; integers are decimal strings.");

  m.def("smith_normal_form",
        [](const Rows& rows) {
          const SnfResult s = smith_normal_form(IntMatrix::from_rows(rows));
          return py::make_tuple(s.invariant_factors, to_rows(s.u), to_rows(s.v));
        },
        py::arg("rows"), "(invariant_factors, U, V) with U * M * V diagonal.");

  m.def("brute_force",
        [](const std::string& f, const std::string& g, std::uint64_t cap) {
          return brute_force_profile(parse_monic(f), parse_monic(g), cap).histogram;
        },
        py::arg("f"), py::arg("g"), py::arg("cap") = kDefaultBruteForceCap,
        "Histogram gcd value -> count over one full period.");

  m.def("minimal_period",
        [](const std::string& f, const std::string& g, std::uint64_t cap) {
          return minimal_period(parse_monic(f), parse_monic(g), cap);
        },
        py::arg("f"), py::arg("g"), py::arg("cap") = kDefaultBruteForceCap);

  m.def("coprime_witness",
        [](const std::string& f, const std::string& g) {
          const MonicIntPoly F = parse_monic(f), G = parse_monic(g);
          const Integer r = resultant(F, G);
          if (r == 0) throw InputError("resultant is 0");
          const WitnessReport w = coprime_witness(F, G, factor(r));
          return py::make_tuple(w.witness, w.blocking_prime);
        },
        py::arg("f"), py::arg("g"), "(witness, blocking_prime); exactly one is None.");

  m.def("common_root",
        [](const std::string& f, const std::string& g, const Integer& p) {
          return common_root_mod_p(parse_monic(f), parse_monic(g), p);
        },
        py::arg("f"), py::arg("g"), py::arg("p"));

  m.def("factor",
        [](const Integer& n) {
          std::vector<std::pair<Integer, unsigned>> out;
          for (const auto& pp : factor(n).factors) out.emplace_back(pp.prime, pp.exponent);
          return out;
        },
        py::arg("n"), "Prime factors of |n| as (prime, exponent) pairs.");

  m.def("is_prime", [](const Integer& n) { return is_prime(n); }, py::arg("n"));
}
