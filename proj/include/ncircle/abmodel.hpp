#pragma once

#include <cstdint>
#include <optional>

#include "ncircle/angles.hpp"

namespace ncircle::ab {

// Natural units: h = 1, hbar = 1/(2 pi). Every formula below depends only on
// dimensionless combinations, so the constants are overridable per call/config.
inline constexpr double kNaturalPlanck = 1.0;
inline constexpr double kNaturalHbar = 1.0 / kTwoPi;

// Diffraction grating illuminated by a monochromatic beam. Momentum p = h/lambda.
struct GratingConfig {
    double wavelength;    // lambda > 0
    double slit_spacing;  // ell > 0
    double planck;        // h > 0

    GratingConfig(double wavelength, double slit_spacing, double planck = kNaturalPlanck);

    double momentum() const { return planck / wavelength; }          // p = h/lambda
    double momentum_quantum() const { return planck / slit_spacing; }  // p0 = h/ell
};

// A row of identical solenoids between the slits. Only the dimensionless
// phase alpha = e Phi_B / (hbar c) is physical, so it is all we store.
struct SolenoidConfig {
    double ab_phase = 0.0;  // any finite real; reduced mod 2pi only where stated
};

// p = p1 + n*p0 with 0 <= p1 < p0.
struct ModularMomentum {
    double p0;             // momentum quantum, > 0
    double p1;             // remainder in [0, p0)
    std::int64_t winding;  // n

    double reconstruct() const { return p1 + static_cast<double>(winding) * p0; }
};

// arcsin(n lambda / ell); empty when |n lambda / ell| > 1 (evanescent order).
std::optional<double> diffraction_angle(std::int64_t order, const GratingConfig& g);

// n h / ell, computed in closed form (no trig round-trip).
double transverse_momentum(std::int64_t order, const GratingConfig& g);

// arcsin((n + alpha/2pi) lambda / ell); empty for evanescent orders. The
// integer part of alpha/2pi is folded into the order first, which makes a
// 2pi phase step relabel orders exactly.
std::optional<double> ab_diffraction_angle(std::int64_t order, const GratingConfig& g,
                                           const SolenoidConfig& s);

// (n + alpha/2pi) h / ell. At alpha = pi the shift fraction is exactly 1/2.
double ab_transverse_momentum(std::int64_t order, const GratingConfig& g,
                              const SolenoidConfig& s);

// Unique decomposition p = p1 + n*p0, 0 <= p1 < p0. Rejects p0 <= 0.
ModularMomentum modular_decompose(double p, double p0);

// e^{i p ell / hbar}. The momentum is reduced modulo the quantum 2 pi hbar / ell
// before exponentiating, so the translation-operator invariance
// modular_phase(p) == modular_phase(p + k * 2 pi hbar / ell) is exact whenever
// the shifted momentum is itself exactly representable.
Complex modular_phase(double p, double ell, double hbar);

// Coordinate 2 pi p1 / p0 of the modular momentum on its circle, in [0, 2pi).
double circle_angle(const ModularMomentum& m);

// |1 + e^{i alpha}|^2 = 2 + 2 cos(alpha) for unit-amplitude partial waves.
double two_path_intensity(double alpha);

}  // namespace ncircle::ab
