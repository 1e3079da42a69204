#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ncircle/angles.hpp"

namespace ncircle::spectral {

using ComplexMatrix = Eigen::MatrixXcd;

// Real eigenvalues sorted ascending.
using Spectrum = std::vector<double>;

struct Eigensystem {
    Spectrum values;        // ascending
    ComplexMatrix vectors;  // column j pairs with values[j]
};

// Largest entrywise modulus.
double max_abs_norm(const ComplexMatrix& m);

// Largest entrywise |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

// All real eigenvalues of a Hermitian matrix, ascending. Inputs with a
// hermiticity defect above 1e-12 are rejected; the message reports the defect.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

// Eigenvalues plus an orthonormal set of eigenvectors.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

// Eigenvalues sum_j row[j] e^{i 2 pi k j / N}, k = 0..N-1, of the circulant
// matrix whose first row is given. Direct O(N^2) evaluation; serves as the
// analytic cross-check for the dense solver on cyclic operators.
std::vector<Complex> circulant_eigenvalues(std::span<const Complex> first_row);

}  // namespace ncircle::spectral
