#include "ncircle/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace ncircle::lattice {

namespace {
constexpr double kUnitModulusTolerance = 1e-14;
}

LatticeParams::LatticeParams(int n_sites_, Boundary boundary_, std::optional<double> eps_,
                             Complex m_)
    : n_sites(n_sites_),
      boundary(boundary_),
      eps(eps_.value_or(std::numbers::sqrt2 / static_cast<double>(n_sites_))),
      m(m_) {
    if (n_sites < 2) throw std::invalid_argument("LatticeParams: n_sites must be >= 2");
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("LatticeParams: eps must be positive");
    if (std::abs(std::abs(m) - 1.0) > kUnitModulusTolerance)
        throw std::invalid_argument("LatticeParams: m must have unit modulus");
}

double LatticeParams::hopping() const { return 1.0 / (eps * std::numbers::sqrt2); }

ComplexMatrix build_dirac(const LatticeParams& p) {
    const int n = p.n_sites;
    const Complex up = std::conj(p.m) * p.hopping();
    const Complex down = p.m * p.hopping();
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    const int last = (p.boundary == Boundary::cyclic) ? n : n - 1;
    for (int i = 0; i < last; ++i) {
        const int j = (i + 1) % n;
        d(i, j) += up;    // contributions add up where the wrap overlaps (N = 2)
        d(j, i) += down;
    }
    return d;
}

ComplexMatrix shift_part(const LatticeParams& p) {
    const int n = p.n_sites;
    const Complex up = std::conj(p.m) * p.hopping();
    ComplexMatrix d1 = ComplexMatrix::Zero(n, n);
    const int last = (p.boundary == Boundary::cyclic) ? n : n - 1;
    for (int i = 0; i < last; ++i) d1(i, (i + 1) % n) += up;
    return d1;
}

ComplexMatrix represent(const AlgebraElement& a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = a[static_cast<std::size_t>(i)];
    return d;
}

GaugeElement build_gauge_element(const LatticeParams& p, double theta, Complex base) {
    if (base == Complex(0.0, 0.0))
        throw std::invalid_argument("build_gauge_element: base must be nonzero");
    GaugeElement c{theta, base, AlgebraElement(static_cast<std::size_t>(p.n_sites))};
    for (int j = 0; j < p.n_sites; ++j) {
        const double angle = theta * static_cast<double>(j) / static_cast<double>(p.n_sites);
        c.values[static_cast<std::size_t>(j)] = unit_phase(angle) * base;
    }
    return c;
}

ComplexMatrix exterior_derivative(const LatticeParams& p, const AlgebraElement& a) {
    if (static_cast<int>(a.size()) != p.n_sites)
        throw std::invalid_argument("exterior_derivative: element length does not match lattice");
    const ComplexMatrix d = build_dirac(p);
    const ComplexMatrix rep = represent(a);
    return d * rep - rep * d;
}

}  // namespace ncircle::lattice
