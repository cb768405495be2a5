#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kmq/brylinski.hpp"
#include "kmq/cli.hpp"
#include "kmq/errors.hpp"
#include "kmq/freudenthal.hpp"
#include "kmq/io.hpp"
#include "kmq/kostant.hpp"
#include "kmq/levelrank.hpp"
#include "kmq/weyl.hpp"

namespace py = pybind11;
using namespace kmq;

namespace {

// Ascending coefficients as Python integers of any size.
py::list coefficients(const QPolynomial& p) {
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& c : p.coefficients()) out.append(to_int(c.get_str()));
  return out;
}

py::list matrix(const CartanData& d) {
  py::list rows;
  for (int i : d.nodes()) {
    py::list row;
    for (int j : d.nodes()) row.append(d.cartan(i, j));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_kmq, m) {
  m.doc() = "Exact q-analogs of weight multiplicities for finite and affine Kac-Moody algebras";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DepthExceeded>(m, "DepthExceeded", PyExc_RuntimeError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<Inconsistent>(m, "Inconsistent", PyExc_ValueError);

  py::class_<AffineWeight>(m, "AffineWeight")
      .def(py::init<Int, std::vector<Int>, Int>(), py::arg("level"), py::arg("finite"), py::arg("energy"))
      .def_readwrite("level", &AffineWeight::level)
      .def_readwrite("finite", &AffineWeight::finite)
      .def_readwrite("energy", &AffineWeight::energy)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(Int() * py::self)
      .def(py::self == py::self)
      .def("__hash__",
           [](const AffineWeight& w) {
             return py::hash(py::make_tuple(w.level, py::tuple(py::cast(w.finite)), w.energy));
           })
      .def("__repr__", [](const AffineWeight& w) { return "AffineWeight" + to_string(w); });

  py::class_<CartanData>(m, "CartanData")
      .def_property_readonly("label", &CartanData::label)
      .def_property_readonly("rank", &CartanData::rank)
      .def_property_readonly("affine", &CartanData::affine)
      .def_property_readonly("dual", &CartanData::dual)
      .def_property_readonly("twist", &CartanData::twist)
      .def_property_readonly("nodes", &CartanData::nodes)
      .def_property_readonly("marks", &CartanData::marks)
      .def_property_readonly("comarks", &CartanData::comarks)
      .def_property_readonly("dual_coxeter", &CartanData::dual_coxeter)
      .def_property_readonly("cartan_matrix", &matrix)
      .def("imag_mult", &CartanData::imag_mult)
      .def("simple_root", &CartanData::simple_root)
      .def("fundamental_weight", &CartanData::fundamental_weight)
      .def("rho", &CartanData::rho)
      .def("delta", &CartanData::delta)
      .def("zero", &CartanData::zero)
      .def("pair", &CartanData::pair)
      .def("form", [](const CartanData& d, const AffineWeight& x, const AffineWeight& y) {
        return d.form(x, y).get_str();
      })
      .def("__repr__", [](const CartanData& d) { return "CartanData(" + d.label() + ")"; });

  m.def("affine_data", py::overload_cast<const std::string&, bool>(&build_affine_data), py::arg("symbol"),
        py::arg("dual") = false);
  m.def("finite_data", py::overload_cast<const std::string&>(&build_finite_data), py::arg("symbol"));
  m.def("parse_weight", &parse_weight, py::arg("data"), py::arg("text"));

  m.def("is_dominant", &is_dominant);
  m.def("kostant_partition",
        [](const CartanData& d, const AffineWeight& beta, Int depth) {
          return coefficients(kostant_partition(d, beta, depth));
        },
        py::arg("data"), py::arg("beta"), py::arg("depth"));
  m.def("q_multiplicity",
        [](const CartanData& d, const AffineWeight& lambda, const AffineWeight& mu, Int depth) {
          return coefficients(q_multiplicity(d, lambda, mu, depth));
        },
        py::arg("data"), py::arg("lam"), py::arg("mu"), py::arg("depth"));
  m.def("weight_multiplicity", &weight_multiplicity, py::arg("data"), py::arg("lam"), py::arg("mu"),
        py::arg("depth"));
  m.def("maximal_lift", &maximal_lift, py::arg("data"), py::arg("lam"), py::arg("mu_bar"), py::arg("depth"));
  m.def("principal_filtration",
        [](const CartanData& d, const AffineWeight& lambda, const AffineWeight& mu, Int depth) {
          auto slice = construct_slice(d, lambda, depth);
          return coefficients(principal_filtration(slice, mu));
        },
        py::arg("data"), py::arg("lam"), py::arg("mu"), py::arg("depth"));

  m.def("psi", &psi, py::arg("N"), py::arg("k"), py::arg("mu"));
  m.def("transpose", &transpose, py::arg("w"), py::arg("N"), py::arg("k"));
  m.def("psi_inverse", &psi_inverse, py::arg("w"), py::arg("N"), py::arg("k"));
  m.def("energy_of_highest", &energy_of_highest);
  m.def("dimension_formula", &dimension_formula, py::arg("data"), py::arg("lam"), py::arg("mu"));
  m.def("check_nakaj_identity",
        [](const std::vector<Int>& lb, const std::vector<Int>& mb, const std::vector<Int>& v, int N, Int k) {
          return check_nakaj_identity(lb, mb, v, N, k).ok();
        },
        py::arg("lambda_bar"), py::arg("mu_bar"), py::arg("v"), py::arg("N"), py::arg("k"));
  m.def("nakajima_lifts",
        [](const std::vector<Int>& v, const std::vector<Int>& w, int N, Int k) {
          auto l = nakajima_lifts(v, w, N, k);
          py::dict d;
          d["lambda_bar"] = l.lambda_bar;
          d["mu_bar"] = l.mu_bar;
          d["lam"] = l.lambda;
          d["mu"] = l.mu;
          d["a"] = l.a;
          return d;
        },
        py::arg("v"), py::arg("w"), py::arg("N"), py::arg("k"));
  m.def("duality_row",
        [](const std::vector<Int>& v, const std::vector<Int>& w, int N, Int k) {
          auto r = duality_row(v, w, N, k);
          py::dict d;
          d["skipped"] = r.skipped;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["nakaj"] = r.nakaj;
          return d;
        },
        py::arg("v"), py::arg("w"), py::arg("N"), py::arg("k"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
