#pragma once

#include <span>
#include <vector>

#include "ncircle/operators.hpp"

namespace ncircle::weyl {

using lattice::LatticeParams;

// Residual of the Weyl form c D1 = e^{-i theta/N} D1 c between the gauge
// element c and the shift half D1 of the Dirac operator. The relation holds
// entrywise off the wrap, so the residual vanishes on the open chain for
// every theta and on the cyclic chain exactly when e^{i theta} = 1; otherwise
// the whole defect sits at the (N,1) wrap entry.
struct WeylReport {
    int n_sites;
    double theta;
    lattice::Boundary boundary;
    double residual;     // max entrywise |c D1 - e^{-i theta/N} D1 c|
    double wrap_defect;  // |(N,1) entry of the difference|; 0 in open mode
};

WeylReport weyl_residual(const LatticeParams& p, double theta,
                         Complex base = Complex(1.0, 0.0));

// One report per theta over a fixed lattice.
std::vector<WeylReport> weyl_sweep(const LatticeParams& p, std::span<const double> thetas);

// Closed form (|base|/(eps sqrt(2))) * 2 |sin(theta/2)| of the cyclic wrap defect.
double wrap_defect_formula(const LatticeParams& p, double theta,
                           Complex base = Complex(1.0, 0.0));

}  // namespace ncircle::weyl
