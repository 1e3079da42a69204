#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace ncircle {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Remainder of x mod modulus in [0, modulus). fmod is exact, so for inputs
// of the form x = r + k*modulus that are themselves exactly representable,
// the result is bit-identical to positive_mod(r, modulus).
inline double positive_mod(double x, double modulus) {
    double r = std::fmod(x, modulus);
    if (r < 0.0) r += modulus;
    if (r >= modulus) r = 0.0;  // r + modulus can round up to modulus itself
    return r;
}

// count*step mod modulus in [0, modulus). The product is split exactly with
// fma, so the reduction error stays at rounding scale no matter how large
// |count*step| grows; products that are exactly representable reduce exactly.
inline double product_mod(double count, double step, double modulus) {
    const double hi = count * step;
    const double lo = std::fma(count, step, -hi);  // exact product residual
    double r = std::fmod(hi, modulus) + lo;
    r = std::fmod(r, modulus);
    if (r < 0.0) r += modulus;
    if (r >= modulus) r = 0.0;
    return r;
}

// Reduce an angle to (-pi, pi].
inline double reduce_to_signed_pi(double theta) {
    double r = positive_mod(theta, kTwoPi);
    if (r > std::numbers::pi) r -= kTwoPi;
    return r;
}

// e^{i*angle}
inline Complex unit_phase(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace ncircle
