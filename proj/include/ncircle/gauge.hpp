#pragma once

#include "ncircle/operators.hpp"

namespace ncircle::gauge {

using lattice::LatticeParams;
using spectral::ComplexMatrix;
using spectral::Spectrum;

// Twist factor sigma entering the connection matrix. The per-step convention
// sigma = e^{-i theta/N} - 1 distributes the holonomy over the N links and is
// the one consistent with the gauge element's eigen-tuple and the Weyl factor;
// the literal convention sigma = e^{-i theta} - 1 puts the whole twist on
// every link and is kept selectable for comparison. Both coincide at N = 1
// and at theta = 0.
enum class SigmaConvention { per_step, paper_literal };

// Hermitian connection one-form rho with hopping-shaped support:
// rho_{i,i+1} = conj(sigma m) / (eps sqrt(2)), rho_{i+1,i} = sigma m / (eps sqrt(2)),
// wrap entries included in cyclic mode.
struct ConnectionForm {
    LatticeParams params;
    double theta;
    SigmaConvention convention;
    ComplexMatrix matrix;
};

struct ThetaSpectrumReport {
    double theta;
    Spectrum free_spectrum;      // eig(D)
    Spectrum gauged_spectrum;    // eig(D + rho)
    Spectrum analytic_shifted;   // (sqrt(2)/eps) cos((2 pi k + theta)/N - arg m), sorted
    double max_deviation;        // max_k |gauged - analytic| after sorting
};

ConnectionForm build_connection(const LatticeParams& p, double theta,
                                SigmaConvention convention = SigmaConvention::per_step);

// D + rho. Hermitian; in the per-step convention the superdiagonal entries
// become e^{i theta/N} conj(m)/(eps sqrt(2)).
ComplexMatrix gauged_dirac(const ComplexMatrix& dirac, const ConnectionForm& rho);

// Sorted closed-form spectrum of the gauged cyclic Dirac operator.
Spectrum analytic_dirac_spectrum(const LatticeParams& p, double theta);

// Flatness witness on the cyclic chain: the gauged spectrum must be exactly
// the theta-shifted free spectrum. Cyclic per-step only.
ThetaSpectrumReport spectral_shift_check(const LatticeParams& p, double theta);

// max |rho - c^{-1}[D, c]| with c the gauge element at theta (base 1).
// Vanishes for any theta on the open chain and for theta in 2 pi Z on the
// cyclic chain; otherwise the defect sits at the two wrap entries.
double pure_gauge_residual(const LatticeParams& p, double theta);

// Curvature of the universal-form representation rho = c^{-1} dc on the open
// chain: max |d(c^{-1}) dc + rho^2|, which cancels algebraically for all
// theta. Refuses cyclic mode, where no one-term pure-form representation of
// rho exists away from theta in 2 pi Z.
double universal_curvature(const LatticeParams& p, double theta);

// Delta_theta = (D + rho)^dagger (D + rho), per-step convention.
ComplexMatrix laplacian(const LatticeParams& p, double theta);

// Sorted eigenvalues of Delta_theta, computed as the squared eigenvalues of
// the Hermitian matrix D + rho (exact nonnegativity, no squared-norm noise).
Spectrum laplacian_spectrum(const LatticeParams& p, double theta);

// Sorted closed-form spectrum of Delta_theta on the cyclic chain:
// (2/eps^2) cos^2((2 pi k + theta)/N - arg m).
Spectrum analytic_laplacian_spectrum(const LatticeParams& p, double theta);

}  // namespace ncircle::gauge
