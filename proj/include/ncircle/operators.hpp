#pragma once

#include <optional>
#include <vector>

#include "ncircle/spectral.hpp"

namespace ncircle::lattice {

using spectral::ComplexMatrix;

enum class Boundary { cyclic, open };

// Parameters of the N-site chain carrying the spectral triple (C^N, C^N, D).
//
// Defaults m = i and eps = sqrt(2)/N put the low-lying spectrum of the gauged
// Dirac operator on the continuum momenta 2 pi k + theta of a unit circle.
struct LatticeParams {
    int n_sites;
    Boundary boundary;
    double eps;  // lattice spacing, > 0
    Complex m;   // unit-modulus hopping phase

    explicit LatticeParams(int n_sites, Boundary boundary = Boundary::cyclic,
                           std::optional<double> eps = std::nullopt,
                           Complex m = Complex(0.0, 1.0));

    // 1/(eps sqrt(2)), the magnitude of every hopping entry.
    double hopping() const;
};

// Element of the diagonal algebra C^N.
using AlgebraElement = std::vector<Complex>;

// Invertible diagonal element with lambda_j = e^{i theta (j-1)/N} * base.
struct GaugeElement {
    double theta;
    Complex base;
    AlgebraElement values;
};

// The self-adjoint hopping operator: superdiagonal conj(m)/(eps sqrt(2)),
// subdiagonal m/(eps sqrt(2)). Cyclic mode adds the wrap entries under the
// identification N+j ~ j; open mode leaves them zero.
ComplexMatrix build_dirac(const LatticeParams& p);

// The shift half D1 of the splitting D = D1 + D1^dagger: the superdiagonal
// component together with the (N,1) wrap entry in cyclic mode.
ComplexMatrix shift_part(const LatticeParams& p);

// Diagonal representation C^N -> M_N(C), c -> diag(lambda_1, ..., lambda_N).
ComplexMatrix represent(const AlgebraElement& a);

// Rejects base = 0; lambda_1 = base.
GaugeElement build_gauge_element(const LatticeParams& p, double theta,
                                 Complex base = Complex(1.0, 0.0));

// Exterior derivative on algebra elements: da = [D, represent(a)].
ComplexMatrix exterior_derivative(const LatticeParams& p, const AlgebraElement& a);

}  // namespace ncircle::lattice
