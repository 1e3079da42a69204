#include "ncircle/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncircle::gauge {

using lattice::Boundary;

namespace {

Complex sigma_factor(const LatticeParams& p, double theta, SigmaConvention convention) {
    const double step = (convention == SigmaConvention::per_step)
                            ? theta / static_cast<double>(p.n_sites)
                            : theta;
    return unit_phase(-step) - 1.0;
}

ComplexMatrix inverse_diagonal(const lattice::GaugeElement& c) {
    const auto n = static_cast<Eigen::Index>(c.values.size());
    ComplexMatrix inv = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) inv(j, j) = 1.0 / c.values[static_cast<std::size_t>(j)];
    return inv;
}

}  // namespace

ConnectionForm build_connection(const LatticeParams& p, double theta,
                                SigmaConvention convention) {
    const Complex sigma = sigma_factor(p, theta, convention);
    const int n = p.n_sites;
    const Complex up = std::conj(sigma) * std::conj(p.m) * p.hopping();
    const Complex down = sigma * p.m * p.hopping();
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    const int last = (p.boundary == Boundary::cyclic) ? n : n - 1;
    for (int i = 0; i < last; ++i) {
        const int j = (i + 1) % n;
        rho(i, j) += up;
        rho(j, i) += down;
    }
    return {p, theta, convention, std::move(rho)};
}

ComplexMatrix gauged_dirac(const ComplexMatrix& dirac, const ConnectionForm& rho) {
    if (dirac.rows() != rho.matrix.rows() || dirac.cols() != rho.matrix.cols())
        throw std::invalid_argument("gauged_dirac: dimension mismatch between D and rho");
    return dirac + rho.matrix;
}

Spectrum analytic_dirac_spectrum(const LatticeParams& p, double theta) {
    const double amplitude = 2.0 * p.hopping();  // sqrt(2)/eps
    const double phase_offset = std::arg(p.m);
    Spectrum values(static_cast<std::size_t>(p.n_sites));
    for (int k = 0; k < p.n_sites; ++k) {
        const double angle =
            (kTwoPi * static_cast<double>(k) + theta) / static_cast<double>(p.n_sites);
        values[static_cast<std::size_t>(k)] = amplitude * std::cos(angle - phase_offset);
    }
    std::sort(values.begin(), values.end());
    return values;
}

ThetaSpectrumReport spectral_shift_check(const LatticeParams& p, double theta) {
    if (p.boundary != Boundary::cyclic)
        throw std::invalid_argument(
            "spectral_shift_check: the analytic shifted spectrum is cyclic-only");
    const ComplexMatrix d = lattice::build_dirac(p);
    const ComplexMatrix h = gauged_dirac(d, build_connection(p, theta));
    ThetaSpectrumReport report;
    report.theta = theta;
    report.free_spectrum = spectral::hermitian_eigenvalues(d);
    report.gauged_spectrum = spectral::hermitian_eigenvalues(h);
    report.analytic_shifted = analytic_dirac_spectrum(p, theta);
    double dev = 0.0;
    for (std::size_t k = 0; k < report.gauged_spectrum.size(); ++k)
        dev = std::max(dev, std::abs(report.gauged_spectrum[k] - report.analytic_shifted[k]));
    report.max_deviation = dev;
    return report;
}

double pure_gauge_residual(const LatticeParams& p, double theta) {
    const ConnectionForm rho = build_connection(p, theta);
    const lattice::GaugeElement c = lattice::build_gauge_element(p, theta);
    const ComplexMatrix dc = lattice::exterior_derivative(p, c.values);
    return spectral::max_abs_norm(rho.matrix - inverse_diagonal(c) * dc);
}

double universal_curvature(const LatticeParams& p, double theta) {
    if (p.boundary != Boundary::open)
        throw std::invalid_argument(
            "universal_curvature: rho has a one-term pure-form representation only on the "
            "open chain; use spectral_shift_check for cyclic flatness");
    const lattice::GaugeElement c = lattice::build_gauge_element(p, theta);
    lattice::AlgebraElement c_inverse(c.values.size());
    for (std::size_t j = 0; j < c.values.size(); ++j) c_inverse[j] = 1.0 / c.values[j];

    const ComplexMatrix dc = lattice::exterior_derivative(p, c.values);
    const ComplexMatrix dc_inverse = lattice::exterior_derivative(p, c_inverse);
    const ComplexMatrix rho = lattice::represent(c_inverse) * dc;  // = c^{-1} dc
    const ComplexMatrix curvature = dc_inverse * dc + rho * rho;
    return spectral::max_abs_norm(curvature);
}

ComplexMatrix laplacian(const LatticeParams& p, double theta) {
    const ComplexMatrix h = gauged_dirac(lattice::build_dirac(p), build_connection(p, theta));
    return h.adjoint() * h;
}

Spectrum laplacian_spectrum(const LatticeParams& p, double theta) {
    const ComplexMatrix h = gauged_dirac(lattice::build_dirac(p), build_connection(p, theta));
    Spectrum values = spectral::hermitian_eigenvalues(h);
    for (double& v : values) v = v * v;
    std::sort(values.begin(), values.end());
    return values;
}

Spectrum analytic_laplacian_spectrum(const LatticeParams& p, double theta) {
    Spectrum values = analytic_dirac_spectrum(p, theta);
    for (double& v : values) v = v * v;
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace ncircle::gauge
