#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncircle/gauge.hpp"

namespace ncircle::cli {

// steps points a + i*(b-a)/steps, i = 0..steps-1 (half-open grid [a, b)).
struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 1;
};

std::vector<double> grid_points(const Grid& g);

// Validated inputs of one CLI invocation. Flags take precedence over the
// optional flat JSON config file; unknown config keys are rejected upstream.
struct RunConfig {
    // lattice
    int n_sites = 8;
    std::optional<double> eps;
    Complex m{0.0, 1.0};
    lattice::Boundary boundary = lattice::Boundary::cyclic;
    gauge::SigmaConvention sigma = gauge::SigmaConvention::per_step;

    // angles
    double theta = 0.0;
    std::optional<Grid> theta_grid;

    // grating / solenoid
    double lambda = 0.5;
    double ell = 1.0;
    double planck = 1.0;
    double alpha = 0.0;
    bool from_grating = false;

    // sweep domains
    std::pair<std::int64_t, std::int64_t> orders{-5, 5};
    Grid p_grid{-3.0, 3.0, 13};
    std::vector<int> sizes{32, 64, 128, 256};
    bool laplacian_mode = false;

    // outputs (empty out_path = stdout)
    std::string out_path;
    std::string svg_path;
    std::string dump_operator_path;
};

// Renderers build the output text; they throw std::invalid_argument on bad
// parameters. Identical configs produce byte-identical text.
std::string render_spectrum_csv(const RunConfig& cfg);
std::string render_weyl_csv(const RunConfig& cfg);
std::string render_diffraction_csv(const RunConfig& cfg);
std::string render_equivalence_csv(const RunConfig& cfg);
std::string render_poset_dot(const RunConfig& cfg);

struct ConvergenceOutput {
    std::string csv;
    std::string svg;  // empty unless svg_path requested
};
ConvergenceOutput render_convergence(const RunConfig& cfg);

// Command entry points: render, write the output files (stdout when no
// --out), report failures on stderr. Return the process exit code.
int cmd_spectrum(const RunConfig& cfg);
int cmd_weyl(const RunConfig& cfg);
int cmd_diffraction(const RunConfig& cfg);
int cmd_equivalence(const RunConfig& cfg);
int cmd_poset(const RunConfig& cfg);
int cmd_convergence(const RunConfig& cfg);

}  // namespace ncircle::cli
