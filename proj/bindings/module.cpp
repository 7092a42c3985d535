#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcqho/format.hpp"
#include "bcqho/verify.hpp"
#include "bcqho/wavefn.hpp"

namespace py = pybind11;
using namespace bcqho;

namespace {

std::string repr_bicomplex(const BiComplex& w) {
  return "BiComplex(e=" + format_double(w.e()) + ", i1=" + format_double(w.i1()) +
         ", i2=" + format_double(w.i2()) + ", j=" + format_double(w.j()) + ")";
}

std::string repr_hyperbolic(const Hyperbolic& h) {
  return "Hyperbolic(" + format_double(h.x1) + ", " + format_double(h.x2) + ")";
}

// exact integer coefficients cross the boundary as Python ints
py::list hermite_coeff_list(const HermitePoly& h) {
  py::list out;
  const auto py_int = py::module_::import("builtins").attr("int");
  for (const auto& c : h.coeffs) out.append(py_int(c.str()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_bcqho, m) {
  m.doc() = "bicomplex arithmetic and the bicomplex quantum harmonic oscillator";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<NullConeError>(m, "NullConeError", PyExc_ValueError);
  py::register_exception<ZeroError>(m, "ZeroError", PyExc_ZeroDivisionError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch",
                                            PyExc_ValueError);
  py::register_exception<InvalidParams>(m, "InvalidParamsError",
                                        PyExc_ValueError);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRangeError",
                                          PyExc_IndexError);
  py::register_exception<BothZeroError>(m, "BothZeroError", PyExc_ValueError);
  py::register_exception<ConstraintViolated>(m, "ConstraintViolatedError",
                                             PyExc_ValueError);
  py::register_exception<ZeroScale>(m, "ZeroScaleError", PyExc_ValueError);
  py::register_exception<OrderTooLarge>(m, "OrderTooLargeError",
                                        PyExc_ValueError);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def(py::init([](double abs_eps, double rel_eps) {
             return Tolerance{abs_eps, rel_eps};
           }),
           py::arg("abs_eps") = 0.0, py::arg("rel_eps") = 1e-12)
      .def_readwrite("abs_eps", &Tolerance::abs_eps)
      .def_readwrite("rel_eps", &Tolerance::rel_eps);

  py::class_<BiComplex>(m, "BiComplex")
      .def(py::init<>())
      .def(py::init<double, double, double, double>(), py::arg("e"),
           py::arg("i1") = 0.0, py::arg("i2") = 0.0, py::arg("j") = 0.0)
      .def_static("from_idempotent", &BiComplex::from_idempotent,
                  py::arg("z1"), py::arg("z2"))
      .def_static("from_complex", &BiComplex::from_complex)
      .def_property_readonly("e", &BiComplex::e)
      .def_property_readonly("i1", &BiComplex::i1)
      .def_property_readonly("i2", &BiComplex::i2)
      .def_property_readonly("j", &BiComplex::j)
      .def_property_readonly("z1", &BiComplex::z1)
      .def_property_readonly("z2", &BiComplex::z2)
      .def("is_zero", &BiComplex::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(double() * py::self)
      .def(py::self * double())
      .def("__repr__", &repr_bicomplex);

  m.def("to_idempotent", &to_idempotent);
  m.def("conj_dagger", &conj_dagger);
  m.def("modulus", py::overload_cast<BiComplex>(&bcqho::modulus));
  m.def("is_null_cone", &is_null_cone, py::arg("w"),
        py::arg("tol") = Tolerance{});
  m.def("inverse", py::overload_cast<BiComplex, Tolerance>(&bcqho::inverse),
        py::arg("w"), py::arg("tol") = Tolerance{});
  m.def("poly_eval", &poly_eval, py::arg("coeffs"), py::arg("w"));

  py::class_<Hyperbolic>(m, "Hyperbolic")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x1"), py::arg("x2"))
      .def_readwrite("x1", &Hyperbolic::x1)
      .def_readwrite("x2", &Hyperbolic::x2)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(double() * py::self)
      .def(py::self * double())
      .def(py::self / double())
      .def("__repr__", &repr_hyperbolic);

  m.def("to_bicomplex", &to_bicomplex);
  m.def("in_d_plus", py::overload_cast<Hyperbolic, bool>(&in_d_plus),
        py::arg("h"), py::arg("strict") = false);
  m.def("in_d_plus",
        py::overload_cast<BiComplex, bool, Tolerance>(&in_d_plus),
        py::arg("w"), py::arg("strict") = false, py::arg("tol") = Tolerance{});
  m.def("exp", py::overload_cast<Hyperbolic>(&bcqho::exp));
  m.def("sqrt", py::overload_cast<Hyperbolic>(&bcqho::sqrt));
  m.def("inv_nth_root", &inv_nth_root, py::arg("h"), py::arg("n"));
  m.def("pow", py::overload_cast<Hyperbolic, double>(&bcqho::pow), py::arg("h"),
        py::arg("p"));

  py::class_<Ket>(m, "Ket")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def_static("basis", &Ket::basis, py::arg("dim"), py::arg("l"))
      .def_property_readonly("dim", &Ket::dim)
      .def("__len__", &Ket::dim)
      .def("__getitem__",
           [](const Ket& k, std::size_t l) {
             if (l >= k.dim()) throw py::index_error();
             return k[l];
           })
      .def("__setitem__",
           [](Ket& k, std::size_t l, BiComplex v) {
             if (l >= k.dim()) throw py::index_error();
             k[l] = v;
           })
      .def("is_zero", &Ket::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__rmul__",
           [](const Ket& k, const BiComplex& s) { return s * k; })
      .def("__rmul__", [](const Ket& k, double s) {
        return BiComplex::from_real(s) * k;
      });

  m.def("scalar_product", &scalar_product);
  m.def("project",
        py::overload_cast<const Ket&, int>(&bcqho::project), py::arg("psi"),
        py::arg("k"));
  m.def("ket_norm", &ket_norm);
  m.def("ket_in_null_cone", &ket_in_null_cone, py::arg("psi"),
        py::arg("tol") = Tolerance{});

  py::class_<BiOperator>(m, "BiOperator")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def_static("identity", &BiOperator::identity, py::arg("dim"))
      .def_property_readonly("dim", &BiOperator::dim)
      .def(
          "entry",
          [](const BiOperator& a, std::size_t row, std::size_t col) {
            if (row >= a.dim() || col >= a.dim()) throw py::index_error();
            return a.entry(row, col);
          },
          py::arg("row"), py::arg("col"))
      .def(
          "set_entry",
          [](BiOperator& a, std::size_t row, std::size_t col, BiComplex v) {
            if (row >= a.dim() || col >= a.dim()) throw py::index_error();
            a.set_entry(row, col, v);
          },
          py::arg("row"), py::arg("col"), py::arg("value"))
      .def("apply", &BiOperator::apply)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__mul__",
           [](const BiOperator& a, const Ket& psi) { return a * psi; })
      .def("__rmul__",
           [](const BiOperator& a, const BiComplex& s) { return s * a; })
      .def("__rmul__", [](const BiOperator& a, double s) {
        return BiComplex::from_real(s) * a;
      });

  m.def("adjoint", &adjoint);
  m.def("commutator", &commutator);
  m.def("is_self_adjoint", &is_self_adjoint, py::arg("a"),
        py::arg("tol") = Tolerance{});
  m.def("operator_in_null_cone", &operator_in_null_cone, py::arg("a"),
        py::arg("tol") = Tolerance{});
  m.def("max_entry_modulus", &max_entry_modulus);

  py::class_<OscillatorParams>(m, "OscillatorParams")
      .def(py::init<>())
      .def(py::init([](double mass, double omega, double hbar, Hyperbolic xi) {
             return OscillatorParams{mass, omega, hbar, xi};
           }),
           py::arg("mass") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0,
           py::arg("xi") = Hyperbolic{1.0, 1.0})
      .def_readwrite("mass", &OscillatorParams::mass)
      .def_readwrite("omega", &OscillatorParams::omega)
      .def_readwrite("hbar", &OscillatorParams::hbar)
      .def_readwrite("xi", &OscillatorParams::xi);

  m.def("validate", &validate);
  m.def("build_ladder", &build_ladder, py::arg("trunc"), py::arg("params"));
  m.def("build_hamiltonian", &build_hamiltonian, py::arg("trunc"),
        py::arg("params"));
  m.def("build_position_momentum", &build_position_momentum, py::arg("trunc"),
        py::arg("params"));

  py::class_<SpectrumEntry>(m, "SpectrumEntry")
      .def_readonly("l", &SpectrumEntry::l)
      .def_readonly("lprime", &SpectrumEntry::lprime)
      .def_readonly("energy", &SpectrumEntry::energy)
      .def_readonly("ket", &SpectrumEntry::ket);

  m.def("eigenket", &eigenket, py::arg("l"), py::arg("lprime"), py::arg("w1"),
        py::arg("w2"), py::arg("trunc"), py::arg("params"));
  m.def("enumerate_spectrum", &enumerate_spectrum, py::arg("max_l"),
        py::arg("max_lprime"), py::arg("trunc"), py::arg("params"));
  m.def("lemma1_check", &lemma1_check, py::arg("phi"), py::arg("lam"),
        py::arg("trunc"), py::arg("params"));
  m.def("rescale_xi", &rescale_xi, py::arg("xi"), py::arg("alpha1"),
        py::arg("alpha2"), py::arg("beta1"), py::arg("beta2"));
  m.def("spectrum_csv", &spectrum_csv);

  py::class_<HermitePoly>(m, "HermitePoly")
      .def_readonly("order", &HermitePoly::order)
      .def_property_readonly("coeffs", &hermite_coeff_list)
      .def("eval", &HermitePoly::eval, py::arg("y"));

  m.def("hermite_coeffs", &hermite_coeffs, py::arg("l"));
  m.def("hermite_hyperbolic_eval", &hermite_hyperbolic_eval, py::arg("l"),
        py::arg("theta"));
  m.def("theta_of_x", &theta_of_x, py::arg("x"), py::arg("params"));

  py::class_<MsTerm>(m, "MsTerm")
      .def(py::init([](int n, double alpha, Complex c) {
             return MsTerm{n, alpha, c};
           }),
           py::arg("n"), py::arg("alpha"), py::arg("c"))
      .def_readwrite("n", &MsTerm::n)
      .def_readwrite("alpha", &MsTerm::alpha)
      .def_readwrite("c", &MsTerm::c);

  py::class_<MsFunction>(m, "MsFunction")
      .def(py::init<>())
      .def(py::init<std::vector<MsTerm>, std::vector<MsTerm>>(), py::arg("u1"),
           py::arg("u2"))
      .def("component", &MsFunction::component, py::arg("k"))
      .def("eval_component", &MsFunction::eval_component, py::arg("k"),
           py::arg("x"))
      .def("__call__", &MsFunction::operator(), py::arg("x"))
      .def("is_zero", &MsFunction::is_zero)
      .def("max_coeff_modulus", &MsFunction::max_coeff_modulus)
      .def("derivative", &MsFunction::derivative)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__",
           [](const MsFunction& u, const BiComplex& s) { return s * u; });

  m.def("apply_X", &apply_X, py::arg("u"));
  m.def("apply_P", &apply_P, py::arg("u"), py::arg("params"));
  m.def("gaussian_moment", &gaussian_moment, py::arg("m"), py::arg("beta"));
  m.def("ms_scalar_product", &ms_scalar_product, py::arg("u"), py::arg("v"));
  m.def("phi_l", &phi_l, py::arg("l"), py::arg("params"));
  m.def("phi_mixed", &phi_mixed, py::arg("l"), py::arg("lprime"),
        py::arg("w1"), py::arg("w2"), py::arg("params"));
  m.def("to_unit_j_form", &to_unit_j_form, py::arg("u"), py::arg("x"));
  m.def("hamiltonian_apply", &hamiltonian_apply, py::arg("u"),
        py::arg("params"));
  m.def("hamiltonian_residual", &hamiltonian_residual, py::arg("l"),
        py::arg("params"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("worst", &CheckResult::worst)
      .def_readonly("threshold", &CheckResult::threshold)
      .def_readonly("passed", &CheckResult::pass);

  py::class_<VerifyConfig>(m, "VerifyConfig")
      .def(py::init<>())
      .def_readwrite("params", &VerifyConfig::params)
      .def_readwrite("trunc", &VerifyConfig::trunc)
      .def_readwrite("tol", &VerifyConfig::tol);

  m.def("verify_suite", &verify_suite, py::arg("suite"), py::arg("cfg"));
  m.def("format_report", &format_report);
  m.def("all_pass", &all_pass);

  // unit constants
  m.attr("ONE") = unit_one;
  m.attr("I1") = unit_i1;
  m.attr("I2") = unit_i2;
  m.attr("J") = unit_j;
  m.attr("E1") = unit_e1;
  m.attr("E2") = unit_e2;
}
