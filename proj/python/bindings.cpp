#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>

#include "clifford/clifford.hpp"

namespace py = pybind11;
using namespace clifford;

namespace {

// None or float('inf') means unbounded.
Count to_count(const py::object& o) {
  if (o.is_none()) return unbounded;
  if (py::isinstance<py::float_>(o)) {
    const double v = o.cast<double>();
    if (std::isinf(v) && v > 0) return unbounded;
    if (v != std::floor(v)) throw py::value_error("signature counts must be integers or inf");
    return static_cast<long long>(v);
  }
  return o.cast<long long>();
}

py::object from_count(const Count& c) {
  if (c.is_unbounded()) return py::float_(INFINITY);
  return py::int_(c.value());
}

std::vector<std::uint32_t> blade_indices(const Blade& b) {
  return {b.indices().begin(), b.indices().end()};
}

py::list term_list(const Multivector& a) {
  py::list out;
  for (const auto& [b, c] : a.terms()) out.append(py::make_tuple(py::tuple(py::cast(blade_indices(b))), c));
  return out;
}

PrintOptions options(const std::string& basis_sep) {
  PrintOptions opts;
  opts.basis_sep = basis_sep;
  opts.validate();
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse Clifford algebra kernel";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_RuntimeError);

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const py::object& p, const py::object& q) { return Signature(to_count(p), to_count(q)); }),
           py::arg("p"), py::arg("q") = 0)
      .def_property_readonly("p", [](const Signature& s) { return from_count(s.p()); })
      .def_property_readonly("q", [](const Signature& s) { return from_count(s.q()); })
      .def("generator_square", &Signature::generator_square, py::arg("i"))
      .def(py::self == py::self)
      .def("__repr__", [](const Signature& s) { return "Signature" + s.to_string(); });

  m.def("euclidean", &euclidean);
  m.def("grassmann", &grassmann);

  m.def(
      "blade_product",
      [](std::vector<std::uint32_t> a, std::vector<std::uint32_t> b, const Signature& sig) {
        auto sb = blade_product(Blade(a), Blade(b), sig);
        return py::make_tuple(sb.sign, blade_indices(sb.blade));
      },
      py::arg("a"), py::arg("b"), py::arg("signature") = euclidean());

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<>())
      .def_static(
          "from_terms",
          [](const std::vector<std::vector<std::uint32_t>>& blades, const std::vector<double>& coeffs) {
            return Multivector::from_terms(blades, coeffs);
          },
          py::arg("blades"), py::arg("coeffs"))
      .def_static("from_scalar", &Multivector::from_scalar, py::arg("c"))
      .def_static("basis", &Multivector::basis, py::arg("i"))
      .def_static(
          "as_1vector", [](const std::vector<double>& v) { return Multivector::as_1vector(v); }, py::arg("v"))
      .def("terms", &term_list)
      .def("is_zero", &Multivector::is_zero)
      .def("scalar_part", &Multivector::scalar_part)
      .def("grades", [](const Multivector& a) { return grades(a); })
      .def("grade", [](const Multivector& a, std::size_t r) { return grade_part(a, r); }, py::arg("r"))
      .def("render", [](const Multivector& a, const std::string& sep) { return render(a, options(sep)); },
           py::arg("basis_sep") = "")
      .def("__len__", &Multivector::size)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const Multivector& a, double c) { return c * a; }, py::is_operator())
      .def("__rmul__", [](const Multivector& a, double c) { return c * a; }, py::is_operator())
      .def("__repr__", [](const Multivector& a) { return render(a); });

  const auto sig_default = py::arg("signature") = euclidean();
  m.def("geometric_product", &geometric_product, py::arg("a"), py::arg("b"), sig_default);
  m.def("wedge", &wedge, py::arg("a"), py::arg("b"));
  m.def("left_contraction", &left_contraction, py::arg("a"), py::arg("b"), sig_default);
  m.def("right_contraction", &right_contraction, py::arg("a"), py::arg("b"), sig_default);
  m.def("power", &power, py::arg("a"), py::arg("k"), sig_default);

  m.def("render", [](const Multivector& a, const std::string& sep) { return render(a, options(sep)); },
        py::arg("a"), py::arg("basis_sep") = "");
  m.def("parse", [](const std::string& text, const std::string& sep) { return parse_multivector(text, options(sep)); },
        py::arg("text"), py::arg("basis_sep") = "");
  m.def("to_mv", &to_mv_string);
  m.def("from_mv", [](const std::string& s) { return from_mv_string(s); });
  m.def("save", &save, py::arg("a"), py::arg("path"));
  m.def("load", &load, py::arg("path"));

  m.def(
      "random_multivector",
      [](std::uint32_t dimension, std::uint32_t max_grade, std::uint32_t num_terms, bool include_fewer,
         std::int32_t coeff_min, std::int32_t coeff_max, std::uint64_t seed) {
        return random_multivector(
            RandomSpec{dimension, max_grade, num_terms, include_fewer, coeff_min, coeff_max, seed});
      },
      py::arg("dimension") = 6, py::arg("max_grade") = 4, py::arg("num_terms") = 9,
      py::arg("include_fewer") = false, py::arg("coeff_min") = -5, py::arg("coeff_max") = 5,
      py::arg("seed") = 0);

  py::class_<Session>(m, "Session")
      .def(py::init<>())
      .def_readwrite("signature", &Session::signature)
      .def_property_readonly("variables", [](const Session& s) {
        py::dict d;
        for (const auto& [k, v] : s.variables) d[py::str(k)] = v;
        return d;
      })
      .def(
          "run",
          [](Session& s, const std::string& line) {
            auto r = run_command(line, s);
            return py::make_tuple(r.output, r.quit);
          },
          py::arg("line"), "Run one REPL line; returns (output, quit).");
}
