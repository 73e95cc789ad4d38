#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "salem/errors.hpp"
#include "salem/forge.hpp"
#include "salem/irreducible.hpp"
#include "salem/report.hpp"
#include "salem/trace.hpp"
#include "salem/units.hpp"

namespace py = pybind11;
using namespace salem;

namespace {

// Python ints cross the boundary through their decimal text.
Integer to_integer(const py::handle& h) {
  return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>(), 10);
}

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

IntPoly to_poly(const py::iterable& coeffs) {
  std::vector<Integer> c;
  for (auto h : coeffs) c.push_back(to_integer(h));
  IntPoly p(std::move(c));
  if (p.is_zero()) throw py::value_error("zero polynomial");
  return p;
}

py::list to_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IrreducibilityOptions irr_options(int cap) {
  IrreducibilityOptions o;
  o.degree_cap = cap;
  return o;
}

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Salem numbers whose power minus one is a unit (C++ core)";

  py::register_exception<InternalInvariantError>(m, "InternalInvariantError");
  py::register_exception<InvalidGeneratorSpec>(m, "InvalidGeneratorSpec", PyExc_ValueError);
  py::register_exception<UnsupportedParameters>(m, "UnsupportedParameters", PyExc_ValueError);
  py::register_exception<GenerationAborted>(m, "GenerationAborted", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "verify",
      [](const py::iterable& coeffs, unsigned max_n, unsigned digits, int irr_cap) {
        VerifyOptions o;
        o.max_n = max_n;
        o.digits = digits;
        o.irreducibility = irr_options(irr_cap);
        return json_loads(to_json(verify_polynomial(to_poly(coeffs), o)));
      },
      py::arg("coeffs"), py::arg("max_n") = 10, py::arg("digits") = 6, py::arg("irr_cap") = 24,
      "Report dict for one polynomial (coefficients ascending). Integers in the report are decimal strings.");

  m.def(
      "parse_poly_file",
      [](const std::string& text) {
        std::istringstream in(text);
        py::list out;
        for (const auto& l : parse_poly_file(in)) out.append(to_py(l.poly));
        return out;
      },
      py::arg("text"));

  m.def(
      "classify",
      [](const py::iterable& coeffs, int irr_cap) {
        return to_string(classify_salem(to_poly(coeffs), irr_options(irr_cap)).tag);
      },
      py::arg("coeffs"), py::arg("irr_cap") = 24, "Salem verdict name, e.g. 'Salem' or 'NotReciprocal'.");

  m.def(
      "alpha",
      [](const py::iterable& coeffs, unsigned digits) {
        const IntPoly p = to_poly(coeffs);
        const auto v = classify_salem(p);
        if (!v.ok()) throw py::value_error("not a Salem polynomial: " + to_string(v.tag));
        return approx_root(p, v.salem->alpha_interval, digits);
      },
      py::arg("coeffs"), py::arg("digits") = 6);

  m.def("compress_trace", [](const py::iterable& c) { return to_py(compress_trace(to_poly(c))); });
  m.def("expand_trace", [](const py::iterable& c) { return to_py(expand_trace(to_poly(c))); });

  m.def(
      "is_irreducible",
      [](const py::iterable& c, int irr_cap) { return to_string(is_irreducible(to_poly(c), irr_options(irr_cap)).tag); },
      py::arg("coeffs"), py::arg("irr_cap") = 24);

  m.def("norm_pow_minus", [](const py::iterable& c, unsigned n) { return to_py(norm_pow_minus(to_poly(c), n)); });
  m.def("norm_pow_plus", [](const py::iterable& c, unsigned n) { return to_py(norm_pow_plus(to_poly(c), n)); });
  m.def(
      "unit_spectrum",
      [](const py::iterable& c, unsigned max_n) {
        const auto s = unit_spectrum(to_poly(c), max_n);
        return std::vector<unsigned>(s.members.begin(), s.members.end());
      },
      py::arg("coeffs"), py::arg("max_n") = 10);
  m.def("evertse_bound", [](unsigned degree) { return to_py(evertse_bound(degree)); }, py::arg("degree"));

  m.def("cyclo_trace", [](unsigned n) { return to_py(cyclo_trace(n)); });
  m.def("chebyshev", [](unsigned k) { return to_py(chebyshev(k)); });
  m.def(
      "family",
      [](const std::string& name, const py::int_& a) {
        const auto f = parse_family(name);
        if (!f) throw py::value_error("family must be F, G or H");
        return to_py(family(*f, to_integer(a)));
      },
      py::arg("name"), py::arg("a"));

  m.def(
      "generate",
      [](unsigned n, unsigned t, unsigned count, std::optional<py::iterable> d, std::optional<py::int_> a_start,
         unsigned max_n) {
        const GeneratorSpec spec = d ? GeneratorSpec::make(n, t, to_poly(*d)) : GeneratorSpec::automatic(n, t);
        std::optional<Integer> start;
        if (a_start) start = to_integer(*a_start);
        VerifyOptions vo;
        vo.max_n = max_n;
        py::list out;
        for (const auto& c : generate_salem_units(spec, count, start).certificates)
          out.append(json_loads(to_json(record_from_certificate(c, vo))));
        return out;
      },
      py::arg("n"), py::arg("t"), py::arg("count") = 1, py::arg("d") = py::none(), py::arg("a_start") = py::none(),
      py::arg("max_n") = 10, "Certified reports from the shifted-product construction.");

  m.def(
      "threshold",
      [](unsigned n, unsigned t) {
        const Rational a = theorem3_threshold(GeneratorSpec::automatic(n, t));
        return py::module_::import("fractions").attr("Fraction")(to_py(Integer(a.get_num())), to_py(Integer(a.get_den())));
      },
      py::arg("n"), py::arg("t"));

  m.def("theorem2_degrees", &theorem2_degrees, py::arg("n"), py::arg("how_many"));

  m.def(
      "recurrence_pairs",
      [](unsigned how_many) {
        py::list out;
        for (const auto& p : prop4_pairs(how_many)) out.append(py::make_tuple(to_py(p.a), to_py(p.b)));
        return out;
      },
      py::arg("how_many"));

  m.def("reproduce", []() {
    py::list out;
    for (const auto& r : reproduce_examples()) out.append(py::make_tuple(r.name, r.pass, r.detail));
    return out;
  });

#ifdef SALEMKIT_VERSION
  m.attr("__version__") = SALEMKIT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
