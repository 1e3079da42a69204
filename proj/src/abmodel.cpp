#include "ncircle/abmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace ncircle::ab {

namespace {

// Splits a phase into alpha = 2pi*k + r with r in [0, 2pi). r is an exact
// remainder (fmod); k is recovered as a rounded integer-valued double.
struct ReducedPhase {
    double winding;   // k
    double fraction;  // r / 2pi, in [0, 1)
};

ReducedPhase reduce_phase(double alpha) {
    const double r = positive_mod(alpha, kTwoPi);
    const double k = std::round((alpha - r) / kTwoPi);
    return {k, r / kTwoPi};
}

std::optional<double> propagating_angle(double sine) {
    if (std::abs(sine) > 1.0) return std::nullopt;
    return std::asin(sine);
}

}  // namespace

GratingConfig::GratingConfig(double wavelength_, double slit_spacing_, double planck_)
    : wavelength(wavelength_), slit_spacing(slit_spacing_), planck(planck_) {
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw std::invalid_argument("GratingConfig: wavelength must be positive");
    if (!(slit_spacing > 0.0) || !std::isfinite(slit_spacing))
        throw std::invalid_argument("GratingConfig: slit_spacing must be positive");
    if (!(planck > 0.0) || !std::isfinite(planck))
        throw std::invalid_argument("GratingConfig: planck must be positive");
}

std::optional<double> diffraction_angle(std::int64_t order, const GratingConfig& g) {
    const double sine = static_cast<double>(order) * g.wavelength / g.slit_spacing;
    return propagating_angle(sine);
}

double transverse_momentum(std::int64_t order, const GratingConfig& g) {
    return static_cast<double>(order) * g.planck / g.slit_spacing;
}

std::optional<double> ab_diffraction_angle(std::int64_t order, const GratingConfig& g,
                                           const SolenoidConfig& s) {
    const auto [winding, fraction] = reduce_phase(s.ab_phase);
    const double effective_order = static_cast<double>(order) + winding;
    const double sine = (effective_order + fraction) * g.wavelength / g.slit_spacing;
    return propagating_angle(sine);
}

double ab_transverse_momentum(std::int64_t order, const GratingConfig& g,
                              const SolenoidConfig& s) {
    const auto [winding, fraction] = reduce_phase(s.ab_phase);
    const double effective_order = static_cast<double>(order) + winding;
    return (effective_order + fraction) * g.planck / g.slit_spacing;
}

ModularMomentum modular_decompose(double p, double p0) {
    if (!(p0 > 0.0) || !std::isfinite(p0))
        throw std::invalid_argument("modular_decompose: p0 must be positive");
    if (!std::isfinite(p))
        throw std::invalid_argument("modular_decompose: p must be finite");
    double n = std::floor(p / p0);
    double p1 = p - n * p0;
    if (p1 < 0.0) {
        p1 += p0;
        n -= 1.0;
    } else if (p1 >= p0) {
        p1 -= p0;
        n += 1.0;
    }
    p1 += 0.0;  // normalize -0.0
    return {p0, p1, static_cast<std::int64_t>(n)};
}

Complex modular_phase(double p, double ell, double hbar) {
    if (!(ell > 0.0)) throw std::invalid_argument("modular_phase: ell must be positive");
    if (!(hbar > 0.0)) throw std::invalid_argument("modular_phase: hbar must be positive");
    const double quantum = kTwoPi * hbar / ell;  // h / ell
    const double reduced = positive_mod(p, quantum);
    return unit_phase(reduced * ell / hbar);
}

double circle_angle(const ModularMomentum& m) {
    return kTwoPi * (m.p1 / m.p0);
}

double two_path_intensity(double alpha) {
    return 2.0 + 2.0 * std::cos(alpha);
}

}  // namespace ncircle::ab
