#include "ncircle/spectral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncircle::spectral {

namespace {
constexpr double kHermitianTolerance = 1e-12;
}

double max_abs_norm(const ComplexMatrix& m) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            best = std::max(best, std::abs(m(i, j)));
    return best;
}

double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs_norm(m - m.adjoint().eval());
}

static void require_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
    const double defect = hermiticity_defect(m);
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream msg;
        msg << "hermitian_eigenvalues: input is not Hermitian, max |m - m^dagger| = "
            << defect;
        throw std::invalid_argument(msg.str());
    }
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    const auto& v = solver.eigenvalues();
    return Spectrum(v.data(), v.data() + v.size());
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");
    const auto& v = solver.eigenvalues();
    return {Spectrum(v.data(), v.data() + v.size()), solver.eigenvectors()};
}

std::vector<Complex> circulant_eigenvalues(std::span<const Complex> first_row) {
    const auto n = static_cast<std::int64_t>(first_row.size());
    if (n < 1) throw std::invalid_argument("circulant_eigenvalues: empty first row");
    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        Complex sum = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
            // k*j mod n keeps the phase argument inside [0, 2pi).
            const double angle = kTwoPi * static_cast<double>((k * j) % n) / static_cast<double>(n);
            sum += first_row[static_cast<std::size_t>(j)] * unit_phase(angle);
        }
        values[static_cast<std::size_t>(k)] = sum;
    }
    return values;
}

}  // namespace ncircle::spectral
