#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittmod/errors.hpp"
#include "wittmod/modules.hpp"
#include "wittmod/poly.hpp"
#include "wittmod/structure.hpp"
#include "wittmod/witt.hpp"

namespace py = pybind11;
using namespace wittmod;

namespace {

// Scalars cross the boundary as "p/q" strings or Python ints.
Scalar to_scalar(const py::object& o) {
  if (py::isinstance<py::int_>(o)) return parse_scalar(py::str(o).cast<std::string>());
  if (py::isinstance<py::str>(o)) return parse_scalar(o.cast<std::string>());
  if (py::hasattr(o, "numerator") && py::hasattr(o, "denominator"))
    return parse_scalar(py::str(o.attr("numerator")).cast<std::string>() + "/" +
                        py::str(o.attr("denominator")).cast<std::string>());
  throw py::type_error("expected int, str or fractions.Fraction");
}

CVec to_cvec(const py::sequence& s) {
  CVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = to_scalar(s[i]);
  return v;
}

std::vector<std::string> cvec_strings(const CVec& v) {
  std::vector<std::string> out;
  for (const auto& c : v.entries()) out.push_back(to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_wittmod, m) {
  m.doc() = "Exact computations with Witt algebra and sl(n+1) modules";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_ValueError);
  py::register_exception<ObstructionError>(m, "ObstructionError", PyExc_RuntimeError);
  py::register_exception<StructuralViolation>(m, "StructuralViolation", PyExc_RuntimeError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text, std::size_t n) { return parse_poly(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_property_readonly("n", &Poly::rank)
      .def_property_readonly("degree", [](const Poly& p) { return total_degree(p); })
      .def("is_zero", &Poly::is_zero)
      .def("coeff", [](const Poly& p, const std::vector<int>& e) { return to_string(p.coeff(MultiIndex(e))); })
      .def("shift", [](const Poly& p, const std::vector<int>& j) { return shift(p, MultiIndex(j)); })
      .def("__add__", [](const Poly& p, const Poly& q) { return p + q; })
      .def("__sub__", [](const Poly& p, const Poly& q) { return p - q; })
      .def("__mul__", [](const Poly& p, const Poly& q) { return p * q; })
      .def("__eq__", [](const Poly& p, const Poly& q) { return p == q; })
      .def("__str__", [](const Poly& p) { return to_string(p); })
      .def("__repr__", [](const Poly& p) { return "Poly('" + to_string(p) + "')"; });

  py::class_<WittElement>(m, "WittElement")
      .def(py::init([](const std::string& text, std::size_t n) { return parse_witt(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_property_readonly("n", &WittElement::rank)
      .def("is_zero", &WittElement::is_zero)
      .def("__add__", [](const WittElement& x, const WittElement& y) { return x + y; })
      .def("__sub__", [](const WittElement& x, const WittElement& y) { return x - y; })
      .def("__eq__", [](const WittElement& x, const WittElement& y) { return x == y; })
      .def("__str__", [](const WittElement& x) { return to_string(x); })
      .def("__repr__", [](const WittElement& x) { return "WittElement('" + to_string(x) + "')"; });

  m.def("bracket", &bracket, py::arg("x"), py::arg("y"));
  m.def("sigma", [](const WittElement& x, const py::object& b) { return sigma(x, to_scalar(b)); },
        py::arg("x"), py::arg("b"));
  m.def("sl_embed", &sl_embed, py::arg("i"), py::arg("j"), py::arg("n"));

  py::class_<OmegaModule>(m, "OmegaModule")
      .def(py::init([](std::size_t n, const py::object& b, const py::sequence& lambda) {
             return OmegaModule(n, to_scalar(b), to_cvec(lambda));
           }),
           py::arg("n"), py::arg("b"), py::arg("lam"))
      .def_static("from_a",
                  [](std::size_t n, const py::object& a, const py::sequence& lambda) {
                    return OmegaModule::from_a(n, to_scalar(a), to_cvec(lambda));
                  },
                  py::arg("n"), py::arg("a"), py::arg("lam"))
      .def_property_readonly("n", &OmegaModule::rank)
      .def_property_readonly("a", [](const OmegaModule& om) { return to_string(om.a()); })
      .def_property_readonly("b", [](const OmegaModule& om) { return to_string(om.b()); })
      .def_property_readonly("lam", [](const OmegaModule& om) { return cvec_strings(om.lambda()); })
      .def("act", [](const OmegaModule& om, const WittElement& x, const Poly& p) { return act_witt_element(om, x, p); },
           py::arg("x"), py::arg("p"))
      .def("module_axiom", py::overload_cast<const OmegaModule&, const WittElement&, const WittElement&, const Poly&>(
                               &module_axiom))
      .def("reduce_degree", [](const OmegaModule& om, const Poly& p) { return reduce_degree(om, p); })
      .def("irreducible_witness", [](const OmegaModule& om, const Poly& p) { return irreducible_witness(om, p); })
      .def("__repr__", [](const OmegaModule& om) {
        return "OmegaModule(n=" + std::to_string(om.rank()) + ", b=" + to_string(om.b()) + ", lam=" +
               to_string(om.lambda()) + ")";
      });

  py::class_<SubspaceBasis>(m, "SubspaceBasis")
      .def_property_readonly("dimension", &SubspaceBasis::dimension)
      .def_readonly("degree_bound", &SubspaceBasis::degree_bound)
      .def("polys", &SubspaceBasis::polys)
      .def("__contains__", [](const SubspaceBasis& b, const Poly& p) { return member_w(p, b); });

  m.def("reducibility_index", [](std::size_t n, const py::object& a) { return reducibility_index(n, to_scalar(a)); },
        py::arg("n"), py::arg("a"));
  m.def("y_product", [](const std::vector<int>& j, const py::object& a) { return y_product({MultiIndex(j), to_scalar(a)}); },
        py::arg("j"), py::arg("a"));
  m.def("w_basis", &w_basis, py::arg("n"), py::arg("m"), py::arg("degree_bound"));
  m.def("member_w", &member_w, py::arg("p"), py::arg("basis"));
  m.def("quotient_dim", &quotient_dim, py::arg("n"), py::arg("m"), py::arg("degree_bound"));
  m.def("lowest_weight_check",
        [](std::size_t n, int mm, const py::sequence& lambda) {
          std::vector<std::string> out;
          for (const auto& v : lowest_weight_check(n, mm, to_cvec(lambda)).values) out.push_back(to_string(v));
          return out;
        },
        py::arg("n"), py::arg("m"), py::arg("lam"));
  m.def("extract_params", [](const OmegaModule& om) {
    const ModuleParams p = extract_params(om);
    return py::make_tuple(to_string(p.a), cvec_strings(p.lambda));
  });
  m.def("isomorphic", &isomorphic);
  m.def("isomorphic_w", &isomorphic_w);
}
