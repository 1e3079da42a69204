#include "ncircle/commands.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "ncircle/abmodel.hpp"
#include "ncircle/continuum.hpp"
#include "ncircle/io.hpp"
#include "ncircle/poset.hpp"
#include "ncircle/weyl.hpp"

namespace ncircle::cli {

std::vector<double> grid_points(const Grid& g) {
    if (g.steps < 1) throw std::invalid_argument("grid: steps must be >= 1");
    if (!(g.stop >= g.start)) throw std::invalid_argument("grid: stop must be >= start");
    std::vector<double> points(static_cast<std::size_t>(g.steps));
    const double span = g.stop - g.start;
    for (int i = 0; i < g.steps; ++i)
        points[static_cast<std::size_t>(i)] =
            g.start + span * static_cast<double>(i) / static_cast<double>(g.steps);
    return points;
}

namespace {

lattice::LatticeParams lattice_params(const RunConfig& cfg) {
    return lattice::LatticeParams(cfg.n_sites, cfg.boundary, cfg.eps, cfg.m);
}

std::vector<double> theta_values(const RunConfig& cfg) {
    if (cfg.theta_grid) return grid_points(*cfg.theta_grid);
    return {cfg.theta};
}

int emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    io::write_text_file(cfg.out_path, text);
    return 0;
}

}  // namespace

std::string render_spectrum_csv(const RunConfig& cfg) {
    if (cfg.sigma != gauge::SigmaConvention::per_step)
        throw std::invalid_argument("spectrum: the shifted-spectrum check is per-step only");
    const auto params = lattice_params(cfg);

    gauge::ThetaSpectrumReport report;
    if (cfg.laplacian_mode) {
        if (cfg.boundary != lattice::Boundary::cyclic)
            throw std::invalid_argument("spectrum: --laplacian needs cyclic boundary");
        report.theta = cfg.theta;
        report.free_spectrum = gauge::laplacian_spectrum(params, 0.0);
        report.gauged_spectrum = gauge::laplacian_spectrum(params, cfg.theta);
        report.analytic_shifted = gauge::analytic_laplacian_spectrum(params, cfg.theta);
        double dev = 0.0;
        for (std::size_t k = 0; k < report.gauged_spectrum.size(); ++k)
            dev = std::max(dev,
                           std::abs(report.gauged_spectrum[k] - report.analytic_shifted[k]));
        report.max_deviation = dev;
    } else {
        report = gauge::spectral_shift_check(params, cfg.theta);
    }

    if (!cfg.dump_operator_path.empty()) {
        const auto h = gauge::gauged_dirac(lattice::build_dirac(params),
                                           gauge::build_connection(params, cfg.theta));
        io::write_text_file(cfg.dump_operator_path, io::matrix_csv(h));
    }
    return io::spectrum_report_csv(report);
}

std::string render_weyl_csv(const RunConfig& cfg) {
    const auto params = lattice_params(cfg);
    std::vector<double> thetas;
    if (cfg.from_grating) {
        thetas.push_back(cfg.planck / cfg.ell);  // theta = h / ell
    } else {
        thetas = theta_values(cfg);
    }
    const auto reports = weyl::weyl_sweep(params, thetas);
    return io::weyl_reports_csv(reports);
}

std::string render_diffraction_csv(const RunConfig& cfg) {
    const ab::GratingConfig grating(cfg.lambda, cfg.ell, cfg.planck);
    const ab::SolenoidConfig solenoid{cfg.alpha};
    if (cfg.orders.first > cfg.orders.second)
        throw std::invalid_argument("diffraction: orders range is empty");

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::string out = "n,angle,angle_ab,px,px_ab,evanescent\n";
    for (std::int64_t n = cfg.orders.first; n <= cfg.orders.second; ++n) {
        const auto angle = ab::diffraction_angle(n, grating);
        const auto angle_ab = ab::ab_diffraction_angle(n, grating, solenoid);
        out += std::to_string(n);
        out += ',';
        out += io::format_g17(angle.value_or(nan));
        out += ',';
        out += io::format_g17(angle_ab.value_or(nan));
        out += ',';
        out += io::format_g17(ab::transverse_momentum(n, grating));
        out += ',';
        out += io::format_g17(ab::ab_transverse_momentum(n, grating, solenoid));
        out += ',';
        out += (angle && angle_ab) ? '0' : '1';
        out += '\n';
    }
    return out;
}

std::string render_equivalence_csv(const RunConfig& cfg) {
    const double p0 = cfg.planck / cfg.ell;  // momentum quantum h / ell
    if (!(p0 > 0.0)) throw std::invalid_argument("equivalence: h/ell must be positive");

    std::string out = "p,p0,x,n,p1_over_p0,theta_reduced,rep_phase_re,rep_phase_im,roundtrip_error\n";
    for (double p : grid_points(cfg.p_grid)) {
        const auto decomposition = ab::modular_decompose(p, p0);
        const auto point = continuum::momentum_to_circle(p, p0);
        const Complex phase = continuum::representation_phase(decomposition.winding, p0);
        const double roundtrip = std::abs(continuum::circle_to_momentum(point.x, p0) - p);
        out += io::format_g17(p);
        out += ',';
        out += io::format_g17(p0);
        out += ',';
        out += io::format_g17(point.x);
        out += ',';
        out += std::to_string(decomposition.winding);
        out += ',';
        out += io::format_g17(decomposition.p1 / p0);
        out += ',';
        out += io::format_g17(point.sector.theta);
        out += ',';
        out += io::format_g17(phase.real());
        out += ',';
        out += io::format_g17(phase.imag());
        out += ',';
        out += io::format_g17(roundtrip);
        out += '\n';
    }
    return out;
}

std::string render_poset_dot(const RunConfig& cfg) {
    return io::poset_dot(poset::build_circle_poset(cfg.n_sites));
}

ConvergenceOutput render_convergence(const RunConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("convergence: need at least one size");
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] < 8)
            throw std::invalid_argument("convergence: sizes must be >= 8");
        if (i > 0 && cfg.sizes[i] <= cfg.sizes[i - 1])
            throw std::invalid_argument("convergence: sizes must be strictly ascending");
    }
    const auto points = continuum::lattice_continuum_convergence(cfg.theta, cfg.sizes);

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::string csv = "N,error,ratio\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double ratio = (i == 0) ? nan : points[i - 1].error / points[i].error;
        csv += std::to_string(points[i].n_sites);
        csv += ',';
        csv += io::format_g17(points[i].error);
        csv += ',';
        csv += io::format_g17(ratio);
        csv += '\n';
    }

    ConvergenceOutput out{csv, ""};
    if (!cfg.svg_path.empty()) {
        bool log_scale = true;
        for (const auto& pt : points)
            if (!(pt.error > 0.0)) log_scale = false;
        std::vector<std::pair<double, double>> chart;
        chart.reserve(points.size());
        for (const auto& pt : points) {
            if (log_scale)
                chart.emplace_back(std::log10(static_cast<double>(pt.n_sites)),
                                   std::log10(pt.error));
            else
                chart.emplace_back(static_cast<double>(pt.n_sites), pt.error);
        }
        out.svg = io::polyline_svg(chart);
    }
    return out;
}

namespace {

template <typename Renderer>
int run(const RunConfig& cfg, Renderer&& render) {
    try {
        return emit(cfg, render(cfg));
    } catch (const std::exception& e) {
        std::cerr << "ncircle: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg) { return run(cfg, render_spectrum_csv); }
int cmd_weyl(const RunConfig& cfg) { return run(cfg, render_weyl_csv); }
int cmd_diffraction(const RunConfig& cfg) { return run(cfg, render_diffraction_csv); }
int cmd_equivalence(const RunConfig& cfg) { return run(cfg, render_equivalence_csv); }
int cmd_poset(const RunConfig& cfg) { return run(cfg, render_poset_dot); }

int cmd_convergence(const RunConfig& cfg) {
    try {
        const auto output = render_convergence(cfg);
        if (!cfg.svg_path.empty()) io::write_text_file(cfg.svg_path, output.svg);
        return emit(cfg, output.csv);
    } catch (const std::exception& e) {
        std::cerr << "ncircle: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ncircle::cli
