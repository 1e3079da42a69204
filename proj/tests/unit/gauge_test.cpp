#include <doctest.h>

#include <algorithm>
#include <random>

#include "ncircle/gauge.hpp"

using namespace ncircle;
using namespace ncircle::gauge;
using lattice::Boundary;
using lattice::LatticeParams;
using spectral::ComplexMatrix;

namespace {

std::mt19937_64 rng(777);

double max_sorted_deviation(const Spectrum& a, const Spectrum& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace

TEST_CASE("connection vanishes at theta = 0 and keeps hopping support") {
    const LatticeParams p(5);
    for (const SigmaConvention convention :
         {SigmaConvention::per_step, SigmaConvention::paper_literal}) {
        const auto rho = build_connection(p, 0.0, convention);
        CHECK(spectral::max_abs_norm(rho.matrix) == 0.0);
    }

    const auto rho = build_connection(p, 1.3);
    CHECK(spectral::hermiticity_defect(rho.matrix) <= 1e-15);
    for (int i = 0; i < p.n_sites; ++i)
        for (int j = 0; j < p.n_sites; ++j) {
            const bool hopping_entry =
                (j == (i + 1) % p.n_sites) || (i == (j + 1) % p.n_sites);
            if (!hopping_entry) CHECK(rho.matrix(i, j) == Complex(0.0, 0.0));
        }
}

TEST_CASE("paper-literal sigma equals per-step sigma at N-fold theta") {
    // sigma_literal(theta) = e^{-i theta} - 1 = sigma_per_step(N * theta);
    // with N = 4 the scaling 4*theta/4 round-trips exactly.
    const LatticeParams p(4, Boundary::cyclic, 0.9, unit_phase(0.4));
    const double theta = 0.8125;
    const auto literal = build_connection(p, theta, SigmaConvention::paper_literal);
    const auto scaled = build_connection(p, 4.0 * theta, SigmaConvention::per_step);
    CHECK(spectral::max_abs_norm(ComplexMatrix(literal.matrix - scaled.matrix)) == 0.0);
}

TEST_CASE("per-step superdiagonal at N = 4, theta = pi") {
    const LatticeParams p(4, Boundary::cyclic, 1.0, Complex(1.0, 0.0));
    const auto rho = build_connection(p, std::numbers::pi);
    const Complex expected =
        (unit_phase(std::numbers::pi / 4.0) - 1.0) * (1.0 / std::numbers::sqrt2);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(rho.matrix(i, (i + 1) % 4) - expected) <= 1e-15);
}

TEST_CASE("gauged_dirac: identity at theta = 0, twisted circulant otherwise") {
    const LatticeParams p(4, Boundary::cyclic, 1.0, Complex(1.0, 0.0));
    const ComplexMatrix d = lattice::build_dirac(p);
    CHECK(spectral::max_abs_norm(ComplexMatrix(gauged_dirac(d, build_connection(p, 0.0)) - d)) ==
          0.0);

    const double theta = 1.1;
    const ComplexMatrix h = gauged_dirac(d, build_connection(p, theta));
    CHECK(spectral::hermiticity_defect(h) <= 1e-15);

    // per-step superdiagonal becomes e^{i theta/N} conj(m) / (eps sqrt2)
    const Complex up = unit_phase(theta / 4.0) * std::conj(p.m) * p.hopping();
    CHECK(std::abs(h(0, 1) - up) <= 1e-15);

    // eigenvalues sqrt(2) cos((2 pi k + theta)/4) via the circulant oracle
    std::vector<Complex> first_row(4);
    for (int j = 0; j < 4; ++j) first_row[static_cast<std::size_t>(j)] = h(0, j);
    auto oracle = spectral::circulant_eigenvalues(first_row);
    std::vector<double> oracle_sorted;
    for (const Complex& v : oracle) {
        CHECK(std::abs(v.imag()) <= 1e-13);
        oracle_sorted.push_back(v.real());
    }
    std::sort(oracle_sorted.begin(), oracle_sorted.end());
    const Spectrum dense = spectral::hermitian_eigenvalues(h);
    const Spectrum analytic = analytic_dirac_spectrum(p, theta);
    for (std::size_t k = 0; k < dense.size(); ++k) {
        CHECK(std::abs(dense[k] - oracle_sorted[k]) <= 1e-12);
        CHECK(std::abs(dense[k] - analytic[k]) <= 1e-12);
    }

    CHECK_THROWS_AS(gauged_dirac(ComplexMatrix::Zero(3, 3), build_connection(p, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("spectral_shift_check certifies the flat holonomy shift") {
    const LatticeParams p(8);
    const auto at_zero = spectral_shift_check(p, 0.0);
    CHECK(at_zero.free_spectrum == at_zero.gauged_spectrum);  // same matrix, same path

    const auto at_two_pi = spectral_shift_check(p, kTwoPi);
    CHECK(max_sorted_deviation(at_two_pi.gauged_spectrum, at_two_pi.free_spectrum) <= 1e-9);

    const auto generic = spectral_shift_check(p, std::numbers::pi / 3.0);
    CHECK(generic.max_deviation <= 1e-10);

    CHECK_THROWS_AS(spectral_shift_check(LatticeParams(8, Boundary::open), 1.0),
                    std::invalid_argument);
}

TEST_CASE("pure gauge: exact on the open chain and at theta in 2 pi Z") {
    CHECK(pure_gauge_residual(LatticeParams(4), 0.0) == 0.0);
    CHECK(pure_gauge_residual(LatticeParams(4), kTwoPi) <= 1e-12);
    CHECK(pure_gauge_residual(LatticeParams(4), -2.0 * kTwoPi) <= 1e-12);

    std::uniform_real_distribution<double> angles(0.0, 2.0 * kTwoPi);
    for (int trial = 0; trial < 25; ++trial) {
        const LatticeParams open_chain(3 + static_cast<int>(rng() % 12), Boundary::open);
        CHECK(pure_gauge_residual(open_chain, angles(rng)) <= 1e-12);
    }
}

TEST_CASE("pure gauge defect on the cyclic chain sits at the wrap entries") {
    // Hand expansion at the wrap, base lambda = 1: rho(N,1) = (e^{i theta/N}-1) conj(m) hop,
    // (c^{-1}[D,c])(N,1) = (e^{-i theta (N-1)/N}-1) conj(m) hop, so the defect has modulus
    // hop * |e^{i theta/N} - e^{-i theta(N-1)/N}| = (1/(eps sqrt2)) * 2|sin(theta/2)|.
    const LatticeParams p(4, Boundary::cyclic, 1.0, Complex(1.0, 0.0));
    const double theta = std::numbers::pi;
    const double residual = pure_gauge_residual(p, theta);
    const double expected = p.hopping() * 2.0 * std::abs(std::sin(theta / 2.0));
    CHECK(residual == doctest::Approx(expected).epsilon(1e-12));
    CHECK(residual == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));

    // Every entry away from the two wrap slots cancels.
    const auto rho = build_connection(p, theta);
    const auto c = lattice::build_gauge_element(p, theta);
    ComplexMatrix c_inv = ComplexMatrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) c_inv(j, j) = 1.0 / c.values[static_cast<std::size_t>(j)];
    const ComplexMatrix difference =
        rho.matrix - ComplexMatrix(c_inv * lattice::exterior_derivative(p, c.values));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool wrap = (i == 3 && j == 0) || (i == 0 && j == 3);
            if (!wrap) CHECK(std::abs(difference(i, j)) <= 1e-15);
        }

    // Positive residual away from 2 pi Z.
    CHECK(pure_gauge_residual(LatticeParams(6), 1.0) > 0.1);

    // Across N and theta the cyclic residual equals the wrap-entry modulus
    // hop * 2|sin(theta/2)| (base 1), which bounds it away from zero.
    std::uniform_real_distribution<double> sweep(0.05, kTwoPi - 0.05);
    for (int n = 3; n <= 12; ++n) {
        const LatticeParams q(n);
        for (int trial = 0; trial < 5; ++trial) {
            const double angle = sweep(rng);
            const double residual = pure_gauge_residual(q, angle);
            const double wrap = q.hopping() * 2.0 * std::abs(std::sin(angle / 2.0));
            CHECK(std::abs(residual - wrap) <= 1e-10);
            CHECK(residual >= wrap - 1e-10);
        }
    }
}

TEST_CASE("universal curvature cancels on the open chain") {
    CHECK(universal_curvature(LatticeParams(4, Boundary::open), 0.0) == 0.0);
    CHECK(universal_curvature(LatticeParams(6, Boundary::open), 1.7) <= 1e-12);
    CHECK(universal_curvature(LatticeParams(3, Boundary::open), kTwoPi) <= 1e-12);
    std::uniform_real_distribution<double> angles(0.0, 2.0 * kTwoPi);
    for (int trial = 0; trial < 25; ++trial)
        CHECK(universal_curvature(LatticeParams(3 + static_cast<int>(rng() % 10), Boundary::open),
                                  angles(rng)) <= 1e-12);

    CHECK_THROWS_AS(universal_curvature(LatticeParams(4), 0.5), std::invalid_argument);
}

TEST_CASE("laplacian: PSD spectrum with the squared dispersion") {
    // theta = 0, N = 4, m = i, eps = sqrt2/4: eigenvalues {0, 0, 16, 16}.
    const LatticeParams p(4);
    const auto direct = spectral::hermitian_eigenvalues(laplacian(p, 0.0));
    const Spectrum expected{0.0, 0.0, 16.0, 16.0};
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(direct[k] - expected[k]) <= 1e-9);

    const Spectrum squared_path = laplacian_spectrum(p, 0.0);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(squared_path[k] - expected[k]) <= 1e-9);

    // PSD on the squared path is exact; the direct solve stays above -1e-12
    // at these sizes.
    std::uniform_real_distribution<double> angles(0.0, kTwoPi);
    for (int trial = 0; trial < 10; ++trial) {
        const LatticeParams q(3 + static_cast<int>(rng() % 14));
        const double theta = angles(rng);
        CHECK(laplacian_spectrum(q, theta).front() >= 0.0);
        CHECK(spectral::hermitian_eigenvalues(laplacian(q, theta)).front() >= -1e-12);
    }

    // Eigen-pair residual on the built matrix.
    const LatticeParams q(12);
    const ComplexMatrix delta = laplacian(q, 0.9);
    const auto [values, vectors] = spectral::hermitian_eigensystem(delta);
    for (int j = 0; j < q.n_sites; ++j) {
        const Eigen::VectorXcd v = vectors.col(j);
        CHECK((delta * v - values[static_cast<std::size_t>(j)] * v).norm() <= 1e-9);
    }
}

TEST_CASE("laplacian spectrum: dispersion, periodicity, and both routes") {
    // N = 64, theta = pi/3: the lowest eigenvalue is N^2 sin^2(theta/N),
    // within 0.1% of theta^2.
    const LatticeParams p(64);
    const double theta = std::numbers::pi / 3.0;
    const Spectrum values = laplacian_spectrum(p, theta);
    const double lowest = values.front();
    CHECK(std::abs(lowest - theta * theta) <= 1e-3 * theta * theta);
    const double closed_form = 64.0 * 64.0 * std::pow(std::sin(theta / 64.0), 2);
    CHECK(std::abs(lowest - closed_form) <= 1e-9);

    CHECK(max_sorted_deviation(values, analytic_laplacian_spectrum(p, theta)) <= 1e-9);

    const Spectrum direct = spectral::hermitian_eigenvalues(laplacian(p, theta));
    CHECK(max_sorted_deviation(values, direct) <= 1e-8 * 64.0 * 64.0);

    CHECK(max_sorted_deviation(laplacian_spectrum(p, theta),
                               laplacian_spectrum(p, theta + kTwoPi)) <= 1e-9);
}

TEST_CASE("gauge covariance under diagonal unitaries") {
    const LatticeParams p(10);
    const double theta = 0.6;
    const ComplexMatrix h =
        gauged_dirac(lattice::build_dirac(p), build_connection(p, theta));
    ComplexMatrix u = ComplexMatrix::Zero(10, 10);
    std::uniform_real_distribution<double> angles(0.0, kTwoPi);
    for (int j = 0; j < 10; ++j) u(j, j) = unit_phase(angles(rng));
    const Spectrum a = spectral::hermitian_eigenvalues(h);
    const Spectrum b = spectral::hermitian_eigenvalues(ComplexMatrix(u.adjoint() * h * u));
    CHECK(max_sorted_deviation(a, b) <= 1e-10);
}
