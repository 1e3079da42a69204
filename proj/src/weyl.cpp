#include "ncircle/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace ncircle::weyl {

using lattice::Boundary;
using spectral::ComplexMatrix;

WeylReport weyl_residual(const LatticeParams& p, double theta, Complex base) {
    const ComplexMatrix d1 = lattice::shift_part(p);
    const ComplexMatrix c = lattice::represent(lattice::build_gauge_element(p, theta, base).values);
    const Complex factor = unit_phase(-theta / static_cast<double>(p.n_sites));
    const ComplexMatrix difference = c * d1 - factor * (d1 * c);
    WeylReport report;
    report.n_sites = p.n_sites;
    report.theta = theta;
    report.boundary = p.boundary;
    report.residual = spectral::max_abs_norm(difference);
    report.wrap_defect =
        (p.boundary == Boundary::cyclic) ? std::abs(difference(p.n_sites - 1, 0)) : 0.0;
    return report;
}

std::vector<WeylReport> weyl_sweep(const LatticeParams& p, std::span<const double> thetas) {
    if (thetas.empty()) throw std::invalid_argument("weyl_sweep: empty theta list");
    std::vector<WeylReport> reports;
    reports.reserve(thetas.size());
    for (double theta : thetas) reports.push_back(weyl_residual(p, theta));
    return reports;
}

double wrap_defect_formula(const LatticeParams& p, double theta, Complex base) {
    return std::abs(base) * p.hopping() * 2.0 * std::abs(std::sin(theta / 2.0));
}

}  // namespace ncircle::weyl
