#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "efb/automorphisms.hpp"
#include "efb/bench.hpp"
#include "efb/errors.hpp"
#include "efb/generators.hpp"
#include "efb/report.hpp"
#include "efb/spinor_spaces.hpp"
#include "efb/text_format.hpp"
#include "efb/word_oracle.hpp"

namespace py = pybind11;
using namespace efb;

namespace {

// Rationals cross the boundary as fractions.Fraction, via their string form.
py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.get_str());
}

Rational from_py(const py::handle& x) {
  if (py::isinstance<py::float_>(x)) throw ParseError("floats are not accepted; use int, str or Fraction");
  return parse_rational(py::str(x).cast<std::string>());
}

Signature sig(const std::string& s) { return Signature::parse(s); }

py::list matrix_to_py(const DenseMatrix<Rational>& M) {
  py::list rows;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < M.cols(); ++c) row.append(to_fraction(M(r, c)));
    rows.append(row);
  }
  return rows;
}

Element matrix_from_py(const py::sequence& rows) {
  const std::size_t n = py::len(rows);
  DenseMatrix<Rational> M(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = rows[r].cast<py::sequence>();
    if (py::len(row) != n) throw DimensionError("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) M(r, c) = from_py(row[c]);
  }
  return from_matrix(M);
}

py::dict report_to_py(const StabilizerReport& r) {
  py::dict d;
  if (r.space_map) {
    py::dict map;
    for (std::size_t b = 0; b < r.space_map->size(); ++b) map[py::str(Signature(r.x.dim(), static_cast<std::uint32_t>(b)).str())] = (*r.space_map)[b].str();
    d["space_map"] = map;
  } else {
    d["space_map"] = py::none();
  }
  d["stabilizes_all"] = r.stabilizes_all();
  d["is_negation"] = r.is_negation();
  d["chirality_factor"] = to_string(r.chirality_factor);
  d["equivalence_holds"] = r.equivalence_holds();
  return d;
}

}  // namespace

PYBIND11_MODULE(efbcl, mod) {
  mod.doc() = "Exact Clifford algebra Cl(m,m) in the extended Fock basis";

  py::register_exception<NotInvertibleError>(mod, "NotInvertibleError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidAutomorphismError>(mod, "InvalidAutomorphismError", PyExc_ValueError);
  py::register_exception<PreconditionError>(mod, "PreconditionError", PyExc_ValueError);
  py::register_exception<DimensionError>(mod, "DimensionError", PyExc_ValueError);

  py::class_<Element>(mod, "Element")
      .def(py::init<int>(), py::arg("m"))
      .def_static("parse", [](int m, const std::string& text) { return parse_element(m, text).value; })
      .def_static("basis", [](const std::string& row, const std::string& col) { return Element::basis(EfbIndex(sig(row), sig(col))); })
      .def_static("from_matrix", &matrix_from_py)
      .def_property_readonly("m", &Element::dim)
      .def("is_zero", &Element::is_zero)
      .def("__len__", &Element::size)
      .def("terms", [](const Element& v) {
        py::list out;
        for (const auto& [x, c] : v.terms()) out.append(py::make_tuple(x.row.str(), x.col.str(), to_fraction(c)));
        return out;
      })
      .def("coefficient", [](const Element& v, const std::string& row, const std::string& col) {
        return to_fraction(v.coefficient(EfbIndex(sig(row), sig(col))));
      })
      .def("to_matrix", [](const Element& v) { return matrix_to_py(to_matrix(v)); })
      .def("to_gamma", [](const Element& v) {
        py::list out;
        for (const auto& g : to_gamma(v)) {
          py::list idx;
          for (int i = 0; i < 64; ++i)
            if (g.mask >> i & 1) idx.append(i + 1);
          out.append(py::make_tuple(py::tuple(idx), to_fraction(g.coef)));
        }
        return out;
      })
      .def("trace", [](const Element& v) { return to_fraction(trace(v)); })
      .def("gamma_text", &format_gamma)
      .def("null_text", &format_null)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__mul__", [](const Element& a, const py::object& k) { return a * from_py(k); })
      .def("__rmul__", [](const Element& a, const py::object& k) { return from_py(k) * a; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__ne__", [](const Element& a, const Element& b) { return !(a == b); })
      .def("__repr__", [](const Element& v) { return "Element(m=" + std::to_string(v.dim()) + ", " + format_gamma(v) + ")"; })
      .def("__str__", &format_gamma);

  mod.def("gamma", &efb::gamma, py::arg("m"), py::arg("i"));
  mod.def("witt_p", &witt_p, py::arg("m"), py::arg("i"));
  mod.def("witt_q", &witt_q, py::arg("m"), py::arg("i"));
  mod.def("identity", &identity, py::arg("m"));
  mod.def("omega", &omega, py::arg("m"));
  mod.def("tau", &tau, py::arg("m"));
  mod.def("omega_tau", &omega_tau, py::arg("m"));

  mod.def("sign_s", [](const std::string& a, const std::string& b, const std::string& d) { return sign_s(sig(a), sig(b), sig(d)); });
  mod.def("table_sign", [](const std::string& a, const std::string& b) { return table_sign(EfbIndex(sig(a), sig(b))); });
  mod.def("reversal_sign", [](const std::string& a, const std::string& b) { return reversal_sign(EfbIndex(sig(a), sig(b))); });
  mod.def("reduce_word", [](int m, const std::string& word) { return oracle::reduce(m, oracle::parse_word(word)); },
          py::arg("m"), py::arg("word"));

  mod.def("main_auto", &main_auto);
  mod.def("reversion_auto", &reversion_auto);
  mod.def("conjugation_auto", &conjugation_auto);
  mod.def("beta_anti", &beta_anti);
  mod.def("dual_transpose", &dual_transpose);
  mod.def("is_invertible", &is_invertible);
  mod.def("inverse", &inverse);
  mod.def("inner", &inner, py::arg("x"), py::arg("v"));
  mod.def("realize_inner", [](const std::vector<Element>& images) { return realize_inner(images); });

  mod.def("chirality", [](const Element& phi) { return to_string(chirality(phi)); });
  mod.def("classify", [](const Element& x) { return report_to_py(classify_stabilizer(x)); });
  mod.def("solve_weyl", [](const Element& v, const std::string& b) { return solve_weyl(v, sig(b)); });
  mod.def("sibling_spinor", [](const Element& phi, const std::string& from_b, const std::string& to_b) {
    return sibling_spinor(phi, sig(from_b), sig(to_b));
  });

  mod.def("render_table", [](int m, const std::string& format) { return report::render_table(m, report::parse_format(format)); },
          py::arg("m"), py::arg("format") = "text");
  mod.def("render_gamma", [](int m, int i, const std::string& format) { return report::render_gamma(m, i, report::parse_format(format)); },
          py::arg("m"), py::arg("i"), py::arg("format") = "text");
  mod.def("count_vector_times_spinor", [](int m, int i) {
    const auto c = bench::count_vector_times_spinor(m, i);
    return py::make_tuple(c.efb, c.dense);
  });
}
