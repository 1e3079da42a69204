#include "ncircle/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncircle/gauge.hpp"
#include "ncircle/operators.hpp"

namespace ncircle::continuum {

ThetaSector::ThetaSector(double raw) : raw_theta(raw), theta(positive_mod(raw, kTwoPi)) {
    if (!std::isfinite(raw)) throw std::invalid_argument("ThetaSector: theta must be finite");
}

SampledWaveFunction::SampledWaveFunction(std::vector<Complex> values)
    : samples(std::move(values)) {
    if (samples.size() < 2)
        throw std::invalid_argument("SampledWaveFunction: need at least 2 samples");
    for (const Complex& v : samples)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("SampledWaveFunction: samples must be finite");
}

Complex covering_projection(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("covering_projection: x must be finite");
    double fractional = x - std::floor(x);  // exact: strips the integer part
    if (fractional >= 1.0) fractional = 0.0;
    return unit_phase(kTwoPi * fractional);
}

Complex deck_phase(const ThetaSector& sector, std::int64_t winding) {
    return unit_phase(product_mod(static_cast<double>(winding), sector.theta, kTwoPi));
}

std::vector<Complex> extend_by_deck(const SampledWaveFunction& phi, const ThetaSector& sector,
                                    std::int64_t winding) {
    const Complex factor = deck_phase(sector, winding);
    std::vector<Complex> extended(phi.samples.size());
    for (std::size_t j = 0; j < phi.samples.size(); ++j) extended[j] = factor * phi.samples[j];
    return extended;
}

double quasi_periodicity_residual(const SampledWaveFunction& phi, const ThetaSector& sector,
                                  std::int64_t winding, std::span<const Complex> extension) {
    if (extension.size() != phi.samples.size())
        throw std::invalid_argument("quasi_periodicity_residual: sample count mismatch");
    const Complex factor = deck_phase(sector, winding);
    double worst = 0.0;
    for (std::size_t j = 0; j < phi.samples.size(); ++j)
        worst = std::max(worst, std::abs(extension[j] - factor * phi.samples[j]));
    return worst;
}

double quasi_periodicity_residual(const SampledWaveFunction& phi, const ThetaSector& sector,
                                  std::int64_t winding) {
    const auto own = extend_by_deck(phi, sector, winding);
    return quasi_periodicity_residual(phi, sector, winding, own);
}

ComplexMatrix twisted_fd_matrix(int m_points, const ThetaSector& sector) {
    if (m_points < 4) throw std::invalid_argument("twisted_fd_matrix: need M >= 4");
    const double scale = static_cast<double>(m_points) * static_cast<double>(m_points);
    ComplexMatrix h = ComplexMatrix::Zero(m_points, m_points);
    for (int j = 0; j < m_points; ++j) h(j, j) = 2.0 * scale;
    for (int j = 0; j + 1 < m_points; ++j) {
        h(j, j + 1) = -scale;
        h(j + 1, j) = -scale;
    }
    h(m_points - 1, 0) = -scale * unit_phase(sector.theta);
    h(0, m_points - 1) = -scale * unit_phase(-sector.theta);
    return h;
}

Spectrum twisted_fd_spectrum(int m_points, const ThetaSector& sector) {
    if (m_points < 4) throw std::invalid_argument("twisted_fd_spectrum: need M >= 4");
    const double m = static_cast<double>(m_points);
    Spectrum values(static_cast<std::size_t>(m_points));
    for (int k = 0; k < m_points; ++k) {
        const double angle = (kTwoPi * static_cast<double>(k) + sector.theta) / m;
        values[static_cast<std::size_t>(k)] = 2.0 * m * m * (1.0 - std::cos(angle));
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<ConvergencePoint> lattice_continuum_convergence(double theta,
                                                            std::span<const int> sizes) {
    const double target = reduce_to_signed_pi(theta);
    std::vector<ConvergencePoint> points;
    points.reserve(sizes.size());
    for (int n : sizes) {
        const lattice::LatticeParams params(n);  // cyclic, eps = sqrt(2)/N, m = i
        const auto h = gauge::gauged_dirac(lattice::build_dirac(params),
                                           gauge::build_connection(params, theta));
        const Spectrum values = spectral::hermitian_eigenvalues(h);
        // Smallest-magnitude eigenvalue. For even N the spectrum contains an
        // exact +-pair at minimal magnitude; break the tie toward the target.
        double min_mag = std::abs(values.front());
        for (double v : values) min_mag = std::min(min_mag, std::abs(v));
        const double tie_band = min_mag + 1e-9 * std::max(1.0, min_mag);
        double picked = values.front();
        double best_distance = std::abs(picked - target) + 1.0;
        for (double v : values) {
            if (std::abs(v) <= tie_band && std::abs(v - target) < best_distance) {
                picked = v;
                best_distance = std::abs(v - target);
            }
        }
        points.push_back({n, std::abs(picked - target)});
    }
    return points;
}

CirclePoint momentum_to_circle(double p, double p0) {
    if (!(p0 > 0.0)) throw std::invalid_argument("momentum_to_circle: p0 must be positive");
    return {p / p0, ThetaSector(p0)};
}

double circle_to_momentum(double x, double p0) {
    if (!(p0 > 0.0)) throw std::invalid_argument("circle_to_momentum: p0 must be positive");
    return x * p0;
}

Complex representation_phase(std::int64_t winding, double p0) {
    if (!(p0 > 0.0)) throw std::invalid_argument("representation_phase: p0 must be positive");
    return unit_phase(product_mod(static_cast<double>(winding), p0, kTwoPi));
}

}  // namespace ncircle::continuum
