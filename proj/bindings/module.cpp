// Python bindings for the main operations: diffraction kinematics, modular
// momentum, the circle poset, lattice operators, gauge/flatness checks, the
// Weyl relation, and the continuum oracles. Matrices cross the boundary as
// numpy arrays via Eigen.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncircle/abmodel.hpp"
#include "ncircle/commands.hpp"
#include "ncircle/continuum.hpp"
#include "ncircle/gauge.hpp"
#include "ncircle/io.hpp"
#include "ncircle/poset.hpp"
#include "ncircle/weyl.hpp"

namespace py = pybind11;
using namespace ncircle;

PYBIND11_MODULE(_core, m) {
    m.doc() = "noncommutative circle-poset lattice toolkit";
#ifdef NCIRCLE_VERSION
    m.attr("__version__") = NCIRCLE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif

    // ----- diffraction + modular momentum ---------------------------------
    py::class_<ab::GratingConfig>(m, "GratingConfig")
        .def(py::init<double, double, double>(), py::arg("wavelength"),
             py::arg("slit_spacing"), py::arg("planck") = ab::kNaturalPlanck)
        .def_readonly("wavelength", &ab::GratingConfig::wavelength)
        .def_readonly("slit_spacing", &ab::GratingConfig::slit_spacing)
        .def_readonly("planck", &ab::GratingConfig::planck)
        .def_property_readonly("momentum", &ab::GratingConfig::momentum)
        .def_property_readonly("momentum_quantum", &ab::GratingConfig::momentum_quantum);

    py::class_<ab::SolenoidConfig>(m, "SolenoidConfig")
        .def(py::init<double>(), py::arg("ab_phase"))
        .def_readonly("ab_phase", &ab::SolenoidConfig::ab_phase);

    py::class_<ab::ModularMomentum>(m, "ModularMomentum")
        .def_readonly("p0", &ab::ModularMomentum::p0)
        .def_readonly("p1", &ab::ModularMomentum::p1)
        .def_readonly("winding", &ab::ModularMomentum::winding)
        .def("reconstruct", &ab::ModularMomentum::reconstruct)
        .def("__repr__", [](const ab::ModularMomentum& v) {
            return "ModularMomentum(p0=" + io::format_g17(v.p0) + ", p1=" +
                   io::format_g17(v.p1) + ", winding=" + std::to_string(v.winding) + ")";
        });

    m.def("diffraction_angle", &ab::diffraction_angle, py::arg("order"), py::arg("grating"),
          "arcsin(n lambda/ell), or None for an evanescent order");
    m.def("transverse_momentum", &ab::transverse_momentum, py::arg("order"),
          py::arg("grating"));
    m.def("ab_diffraction_angle", &ab::ab_diffraction_angle, py::arg("order"),
          py::arg("grating"), py::arg("solenoid"));
    m.def("ab_transverse_momentum", &ab::ab_transverse_momentum, py::arg("order"),
          py::arg("grating"), py::arg("solenoid"));
    m.def("modular_decompose", &ab::modular_decompose, py::arg("p"), py::arg("p0"));
    m.def("modular_phase", &ab::modular_phase, py::arg("p"), py::arg("ell"), py::arg("hbar"));
    m.def("circle_angle", &ab::circle_angle, py::arg("modular_momentum"));
    m.def("two_path_intensity", &ab::two_path_intensity, py::arg("alpha"));
    m.attr("NATURAL_PLANCK") = ab::kNaturalPlanck;
    m.attr("NATURAL_HBAR") = ab::kNaturalHbar;

    // ----- circle poset ----------------------------------------------------
    py::class_<poset::CirclePoset>(m, "CirclePoset")
        .def_readonly("n_cells", &poset::CirclePoset::n_cells)
        .def_readonly("covers", &poset::CirclePoset::covers)
        .def_property_readonly("point_count", &poset::CirclePoset::point_count)
        .def("leq", [](const poset::CirclePoset& p, int a, int b) { return leq(p, a, b); },
             py::arg("a"), py::arg("b"))
        .def("minimal_open_set",
             [](const poset::CirclePoset& p, int a) { return minimal_open_set(p, a); },
             py::arg("point"))
        .def("is_t0", [](const poset::CirclePoset& p) { return is_t0(p); })
        .def("hasse_edges", [](const poset::CirclePoset& p) { return hasse_edges(p); });
    m.def("build_circle_poset", &poset::build_circle_poset, py::arg("n_cells"));

    // ----- lattice operators ------------------------------------------------
    py::enum_<lattice::Boundary>(m, "Boundary")
        .value("cyclic", lattice::Boundary::cyclic)
        .value("open", lattice::Boundary::open);

    py::class_<lattice::LatticeParams>(m, "LatticeParams")
        .def(py::init<int, lattice::Boundary, std::optional<double>, Complex>(),
             py::arg("n_sites"), py::arg("boundary") = lattice::Boundary::cyclic,
             py::arg("eps") = std::nullopt, py::arg("m") = Complex(0.0, 1.0))
        .def_readonly("n_sites", &lattice::LatticeParams::n_sites)
        .def_readonly("boundary", &lattice::LatticeParams::boundary)
        .def_readonly("eps", &lattice::LatticeParams::eps)
        .def_readonly("m", &lattice::LatticeParams::m)
        .def("hopping", &lattice::LatticeParams::hopping);

    py::class_<lattice::GaugeElement>(m, "GaugeElement")
        .def_readonly("theta", &lattice::GaugeElement::theta)
        .def_readonly("base", &lattice::GaugeElement::base)
        .def_readonly("values", &lattice::GaugeElement::values);

    m.def("build_dirac", &lattice::build_dirac, py::arg("params"));
    m.def("shift_part", &lattice::shift_part, py::arg("params"));
    m.def("represent", &lattice::represent, py::arg("values"));
    m.def("build_gauge_element", &lattice::build_gauge_element, py::arg("params"),
          py::arg("theta"), py::arg("base") = Complex(1.0, 0.0));
    m.def("exterior_derivative", &lattice::exterior_derivative, py::arg("params"),
          py::arg("values"));

    // ----- gauge / flatness --------------------------------------------------
    py::enum_<gauge::SigmaConvention>(m, "SigmaConvention")
        .value("per_step", gauge::SigmaConvention::per_step)
        .value("paper_literal", gauge::SigmaConvention::paper_literal);

    py::class_<gauge::ConnectionForm>(m, "ConnectionForm")
        .def_readonly("theta", &gauge::ConnectionForm::theta)
        .def_readonly("convention", &gauge::ConnectionForm::convention)
        .def_readonly("matrix", &gauge::ConnectionForm::matrix);

    py::class_<gauge::ThetaSpectrumReport>(m, "ThetaSpectrumReport")
        .def_readonly("theta", &gauge::ThetaSpectrumReport::theta)
        .def_readonly("free_spectrum", &gauge::ThetaSpectrumReport::free_spectrum)
        .def_readonly("gauged_spectrum", &gauge::ThetaSpectrumReport::gauged_spectrum)
        .def_readonly("analytic_shifted", &gauge::ThetaSpectrumReport::analytic_shifted)
        .def_readonly("max_deviation", &gauge::ThetaSpectrumReport::max_deviation);

    m.def("build_connection", &gauge::build_connection, py::arg("params"), py::arg("theta"),
          py::arg("convention") = gauge::SigmaConvention::per_step);
    m.def("gauged_dirac", &gauge::gauged_dirac, py::arg("dirac"), py::arg("connection"));
    m.def("analytic_dirac_spectrum", &gauge::analytic_dirac_spectrum, py::arg("params"),
          py::arg("theta"));
    m.def("spectral_shift_check", &gauge::spectral_shift_check, py::arg("params"),
          py::arg("theta"));
    m.def("pure_gauge_residual", &gauge::pure_gauge_residual, py::arg("params"),
          py::arg("theta"));
    m.def("universal_curvature", &gauge::universal_curvature, py::arg("params"),
          py::arg("theta"));
    m.def("laplacian", &gauge::laplacian, py::arg("params"), py::arg("theta"));
    m.def("laplacian_spectrum", &gauge::laplacian_spectrum, py::arg("params"),
          py::arg("theta"));
    m.def("analytic_laplacian_spectrum", &gauge::analytic_laplacian_spectrum,
          py::arg("params"), py::arg("theta"));

    // ----- Weyl relation ------------------------------------------------------
    py::class_<weyl::WeylReport>(m, "WeylReport")
        .def_readonly("n_sites", &weyl::WeylReport::n_sites)
        .def_readonly("theta", &weyl::WeylReport::theta)
        .def_readonly("boundary", &weyl::WeylReport::boundary)
        .def_readonly("residual", &weyl::WeylReport::residual)
        .def_readonly("wrap_defect", &weyl::WeylReport::wrap_defect);

    m.def("weyl_residual", &weyl::weyl_residual, py::arg("params"), py::arg("theta"),
          py::arg("base") = Complex(1.0, 0.0));
    m.def("weyl_sweep",
          [](const lattice::LatticeParams& p, const std::vector<double>& thetas) {
              return weyl::weyl_sweep(p, thetas);
          },
          py::arg("params"), py::arg("thetas"));
    m.def("wrap_defect_formula", &weyl::wrap_defect_formula, py::arg("params"),
          py::arg("theta"), py::arg("base") = Complex(1.0, 0.0));

    // ----- continuum / theta-quantization --------------------------------------
    py::class_<continuum::ThetaSector>(m, "ThetaSector")
        .def(py::init<double>(), py::arg("theta"))
        .def_readonly("raw_theta", &continuum::ThetaSector::raw_theta)
        .def_readonly("theta", &continuum::ThetaSector::theta);

    py::class_<continuum::SampledWaveFunction>(m, "SampledWaveFunction")
        .def(py::init<std::vector<Complex>>(), py::arg("samples"))
        .def_readonly("samples", &continuum::SampledWaveFunction::samples);

    py::class_<continuum::ConvergencePoint>(m, "ConvergencePoint")
        .def_readonly("n_sites", &continuum::ConvergencePoint::n_sites)
        .def_readonly("error", &continuum::ConvergencePoint::error);

    py::class_<continuum::CirclePoint>(m, "CirclePoint")
        .def_readonly("x", &continuum::CirclePoint::x)
        .def_readonly("sector", &continuum::CirclePoint::sector);

    m.def("covering_projection", &continuum::covering_projection, py::arg("x"));
    m.def("deck_phase", &continuum::deck_phase, py::arg("sector"), py::arg("winding"));
    m.def("extend_by_deck", &continuum::extend_by_deck, py::arg("phi"), py::arg("sector"),
          py::arg("winding"));
    m.def("quasi_periodicity_residual",
          [](const continuum::SampledWaveFunction& phi, const continuum::ThetaSector& sector,
             std::int64_t winding, const std::vector<Complex>& extension) {
              return continuum::quasi_periodicity_residual(phi, sector, winding, extension);
          },
          py::arg("phi"), py::arg("sector"), py::arg("winding"), py::arg("extension"));
    m.def("quasi_periodicity_residual",
          [](const continuum::SampledWaveFunction& phi, const continuum::ThetaSector& sector,
             std::int64_t winding) {
              return continuum::quasi_periodicity_residual(phi, sector, winding);
          },
          py::arg("phi"), py::arg("sector"), py::arg("winding"));
    m.def("twisted_fd_matrix", &continuum::twisted_fd_matrix, py::arg("m_points"),
          py::arg("sector"));
    m.def("twisted_fd_spectrum", &continuum::twisted_fd_spectrum, py::arg("m_points"),
          py::arg("sector"));
    m.def("lattice_continuum_convergence",
          [](double theta, const std::vector<int>& sizes) {
              return continuum::lattice_continuum_convergence(theta, sizes);
          },
          py::arg("theta"), py::arg("sizes"));
    m.def("momentum_to_circle", &continuum::momentum_to_circle, py::arg("p"), py::arg("p0"));
    m.def("circle_to_momentum", &continuum::circle_to_momentum, py::arg("x"), py::arg("p0"));
    m.def("representation_phase", &continuum::representation_phase, py::arg("winding"),
          py::arg("p0"));

    // ----- spectral helpers ------------------------------------------------------
    m.def("hermitian_eigenvalues", &spectral::hermitian_eigenvalues, py::arg("matrix"));
    m.def("circulant_eigenvalues",
          [](const std::vector<Complex>& first_row) {
              return spectral::circulant_eigenvalues(first_row);
          },
          py::arg("first_row"));
    m.def("max_abs_norm", &spectral::max_abs_norm, py::arg("matrix"));
}
