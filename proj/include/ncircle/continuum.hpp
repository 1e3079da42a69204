#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncircle/spectral.hpp"

namespace ncircle::continuum {

using spectral::ComplexMatrix;
using spectral::Spectrum;

// One quantization sector on the covering space R -> S^1. Only e^{i theta} is
// physical, so the reduced angle in [0, 2pi) drives every spectrum; the raw
// value is kept for reporting.
struct ThetaSector {
    double raw_theta;
    double theta;  // raw_theta mod 2pi, in [0, 2pi)

    explicit ThetaSector(double raw);
};

// M samples of a wave function at x_j = j/M on one fundamental domain [0,1).
struct SampledWaveFunction {
    std::vector<Complex> samples;

    explicit SampledWaveFunction(std::vector<Complex> values);
    int size() const { return static_cast<int>(samples.size()); }
};

// The covering projection x -> e^{i 2 pi x}. x is reduced mod 1 exactly, so
// covering_projection(x + N) == covering_projection(x) bit-for-bit whenever
// x + N is exactly representable.
Complex covering_projection(double x);

// Deck-transformation multiplier e^{i winding * theta}, with the total angle
// reduced mod 2pi before exponentiating.
Complex deck_phase(const ThetaSector& sector, std::int64_t winding);

// Values of phi on the translated domain [winding, winding+1), generated by
// the quasi-periodicity rule phi(x + N) = e^{i N theta} phi(x).
std::vector<Complex> extend_by_deck(const SampledWaveFunction& phi, const ThetaSector& sector,
                                    std::int64_t winding);

// Max deviation of a candidate extension from the quasi-periodicity rule.
double quasi_periodicity_residual(const SampledWaveFunction& phi, const ThetaSector& sector,
                                  std::int64_t winding, std::span<const Complex> extension);

// Self-check overload: residual of the artifact's own extension (always 0).
double quasi_periodicity_residual(const SampledWaveFunction& phi, const ThetaSector& sector,
                                  std::int64_t winding);

// The M-point second-difference operator on the unit circle with twisted
// boundary psi(j + M) = e^{i theta} psi(j): diagonal 2 M^2, off-diagonal
// -M^2, wrap entries -M^2 e^{+-i theta}. Rejects M < 4.
ComplexMatrix twisted_fd_matrix(int m_points, const ThetaSector& sector);

// Closed-form spectrum 2 M^2 (1 - cos((2 pi k + theta)/M)), k = 0..M-1,
// sorted. The lowest value tends to theta^2 as M grows, theta in (-pi, pi].
Spectrum twisted_fd_spectrum(int m_points, const ThetaSector& sector);

struct ConvergencePoint {
    int n_sites;
    double error;  // | nearest-to-zero eigenvalue of D + rho  -  theta reduced |
};

// Second-order convergence of the gauged lattice Dirac spectrum to the
// continuum momentum: cyclic per-step chain with the m = i, eps = sqrt(2)/N
// defaults, theta reduced to (-pi, pi].
std::vector<ConvergencePoint> lattice_continuum_convergence(double theta,
                                                            std::span<const int> sizes);

struct CirclePoint {
    double x;           // p / p0, position on the covering space
    ThetaSector sector; // theta = p0 (reduced mod 2pi in .theta)
};

// The replacement map theta -> p0, x -> p/p0 between modular momentum and
// circle variables. Rejects p0 <= 0.
CirclePoint momentum_to_circle(double p, double p0);

// Inverse map p = x * p0. Rejects p0 <= 0.
double circle_to_momentum(double x, double p0);

// Multiplier e^{i n p0} of the winding representation of Z acting on the
// sampled wave function, total angle reduced mod 2pi first.
Complex representation_phase(std::int64_t winding, double p0);

}  // namespace ncircle::continuum
