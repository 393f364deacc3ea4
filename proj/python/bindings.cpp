#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relosc/errors.hpp"
#include "relosc/orthopoly.hpp"
#include "relosc/oscillator.hpp"
#include "relosc/verify.hpp"

namespace py = pybind11;
using namespace relosc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the relosc library";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", error.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
    py::register_exception<CollapseError>(m, "CollapseError", error.ptr());
    py::register_exception<ComplexExponentError>(m, "ComplexExponentError", error.ptr());
    py::register_exception<SingularPointError>(m, "SingularPointError", error.ptr());
    py::register_exception<GridTooSmallError>(m, "GridTooSmallError", error.ptr());

    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init<>())
        .def(py::init<double, double, double, double, double>(), py::arg("m"), py::arg("omega"),
             py::arg("g"), py::arg("c"), py::arg("hbar"))
        .def_static("natural", &OscillatorParams::natural, py::arg("g"), py::arg("c"))
        .def_property_readonly("m", &OscillatorParams::m)
        .def_property_readonly("omega", &OscillatorParams::omega)
        .def_property_readonly("g", &OscillatorParams::g)
        .def_property_readonly("c", &OscillatorParams::c)
        .def_property_readonly("hbar", &OscillatorParams::hbar)
        .def_property_readonly("lambda_", &OscillatorParams::lambda)
        .def_property_readonly("omega0", &OscillatorParams::omega0)
        .def_property_readonly("g0", &OscillatorParams::g0)
        .def_property_readonly("mu", &OscillatorParams::mu)
        .def_property_readonly("rest_energy", &OscillatorParams::rest_energy)
        .def("with_g", &OscillatorParams::with_g)
        .def("with_c", &OscillatorParams::with_c)
        .def("__repr__", [](const OscillatorParams& p) {
            return "OscillatorParams(m=" + py::repr(py::float_(p.m())).cast<std::string>() +
                   ", omega=" + py::repr(py::float_(p.omega())).cast<std::string>() +
                   ", g=" + py::repr(py::float_(p.g())).cast<std::string>() +
                   ", c=" + py::repr(py::float_(p.c())).cast<std::string>() +
                   ", hbar=" + py::repr(py::float_(p.hbar())).cast<std::string>() + ")";
        });

    py::enum_<Regime>(m, "Regime")
        .value("Real", Regime::Real)
        .value("ComplexConjugate", Regime::ComplexConjugate)
        .value("Collapse", Regime::Collapse);

    py::class_<SpectralSolution>(m, "SpectralSolution")
        .def_readonly("alpha", &SpectralSolution::alpha)
        .def_readonly("nu", &SpectralSolution::nu)
        .def_readonly("regime", &SpectralSolution::regime)
        .def_readonly("d", &SpectralSolution::d)
        .def_readonly("nu_prime", &SpectralSolution::nu_prime)
        .def_readonly("omega0", &SpectralSolution::omega0)
        .def_property_readonly("alpha_plus_nu", &SpectralSolution::alpha_plus_nu);

    m.def("ln_gamma", &ln_gamma, py::arg("z"));
    m.def("critical_coupling", &critical_coupling, py::arg("params"));
    m.def("classify_regime", &classify_regime, py::arg("params"));
    m.def("compute_alpha_nu", &compute_alpha_nu, py::arg("params"));
    m.def("energy_level", &energy_level, py::arg("n"), py::arg("params"));
    m.def("binding_energy", &binding_energy, py::arg("n"), py::arg("params"));
    m.def(
        "wavefunction",
        [](unsigned n, py::array_t<Complex, py::array::c_style | py::array::forcecast> rho,
           const OscillatorParams& params) -> py::object {
            const SpectralSolution sol = compute_alpha_nu(params);
            if (rho.ndim() == 0) {
                return py::cast(wavefunction(n, *rho.data(), params, sol).value);
            }
            py::array_t<Complex> out(rho.request().shape);
            Complex* dst = out.mutable_data();
            const Complex* src = rho.data();
            for (py::ssize_t i = 0; i < rho.size(); ++i) {
                dst[i] = wavefunction(n, src[i], params, sol).value;
            }
            return out;
        },
        py::arg("n"), py::arg("rho"), py::arg("params"),
        "psi_n at each rho; accepts scalars or arrays, returns complex values");
    m.def(
        "nonrel_wavefunction",
        [](unsigned n, py::array_t<double, py::array::c_style | py::array::forcecast> x,
           const OscillatorParams& params) -> py::object {
            if (x.ndim() == 0) {
                return py::cast(nonrel_wavefunction(n, *x.data(), params));
            }
            py::array_t<double> out(x.request().shape);
            for (py::ssize_t i = 0; i < x.size(); ++i) {
                out.mutable_data()[i] = nonrel_wavefunction(n, x.data()[i], params);
            }
            return out;
        },
        py::arg("n"), py::arg("x"), py::arg("params"));

    py::class_<CdhParams>(m, "CdhParams")
        .def(py::init([](Complex a, Complex b, Complex c) { return CdhParams{a, b, c}; }), py::arg("a"),
             py::arg("b"), py::arg("c"))
        .def_readwrite("a", &CdhParams::a)
        .def_readwrite("b", &CdhParams::b)
        .def_readwrite("c", &CdhParams::c);
    m.def("cdh_series", &cdh_series, py::arg("n"), py::arg("x_sq"), py::arg("params"));
    m.def("cdh_recurrence", &cdh_recurrence, py::arg("n"), py::arg("x_sq"), py::arg("params"));
    m.def("meixner_pollaczek", &meixner_pollaczek, py::arg("n"), py::arg("x"), py::arg("lam"),
          py::arg("phi"));

    py::class_<QuadratureGrid>(m, "QuadratureGrid")
        .def_readonly("truncation_radius", &QuadratureGrid::truncation_radius)
        .def_readonly("tail_bound", &QuadratureGrid::tail_bound)
        .def_property_readonly("size", [](const QuadratureGrid& g) { return g.abscissae.size(); });
    m.def(
        "make_quadrature_grid",
        [](const OscillatorParams& params, unsigned n_states) { return make_quadrature_grid(params, n_states); },
        py::arg("params"), py::arg("n_states"));
    m.def(
        "overlap_matrix",
        [](unsigned n_states, const OscillatorParams& params, double tolerance) {
            const QuadratureGrid grid = make_quadrature_grid(params, n_states);
            const ComplexMatrix g = overlap_matrix(n_states, params, grid, tolerance);
            py::array_t<Complex> out({g.size, g.size});
            std::copy(g.data.begin(), g.data.end(), out.mutable_data());
            return out;
        },
        py::arg("n_states"), py::arg("params"), py::arg("tolerance") = 1e-8);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check_name", &VerificationReport::check_name)
        .def_readonly("params", &VerificationReport::params)
        .def_readonly("residual", &VerificationReport::residual)
        .def_readonly("tolerance", &VerificationReport::tolerance)
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("notes", &VerificationReport::notes);
    m.def("check_names", &check_names);
    m.def(
        "run_verification_suite",
        [](const OscillatorParams& params, unsigned n_max, std::vector<std::string> only,
           double tolerance_scale) {
            SuiteOptions opts;
            opts.params = params;
            opts.n_max = n_max;
            opts.only = std::move(only);
            opts.tolerance_scale = tolerance_scale;
            return run_verification_suite(opts);
        },
        py::arg("params") = OscillatorParams{}, py::arg("n_max") = 8,
        py::arg("only") = std::vector<std::string>{}, py::arg("tolerance_scale") = 1.0);
}
