#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncircle/commands.hpp"
#include "ncircle/io.hpp"

using namespace ncircle;
using namespace ncircle::cli;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("grid_points spans the half-open interval") {
    const auto pair = grid_points({0.0, 2.0 * kTwoPi, 2});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == 0.0);
    CHECK(pair[1] == kTwoPi);

    const auto twenty = grid_points({0.0, 2.0 * kTwoPi, 20});
    CHECK(twenty.size() == 20);
    CHECK(twenty.back() < 2.0 * kTwoPi);
    CHECK_THROWS_AS(grid_points({0.0, 1.0, 0}), std::invalid_argument);
}

TEST_CASE("spectrum command: free equals gauged at theta 0, deviation stays tiny") {
    RunConfig cfg;
    cfg.n_sites = 8;
    cfg.theta = 0.0;
    const auto rows = lines_of(render_spectrum_csv(cfg));
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "k,free,gauged,analytic,deviation");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = cells_of(rows[i]);
        REQUIRE(cells.size() == 5);
        CHECK(cells[1] == cells[2]);  // free == gauged, byte for byte
    }

    cfg.theta = std::numbers::pi / 3.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = cells_of(lines_of(render_spectrum_csv(cfg))[i]);
        CHECK(std::stod(cells[4]) <= 1e-10);
    }

    cfg.laplacian_mode = true;
    const auto laplacian_rows = lines_of(render_spectrum_csv(cfg));
    CHECK(laplacian_rows[0] == "k,free,gauged,analytic,deviation");
    for (std::size_t i = 1; i < laplacian_rows.size(); ++i)
        CHECK(std::stod(cells_of(laplacian_rows[i])[4]) <= 1e-9);

    RunConfig bad;
    bad.n_sites = 1;
    CHECK_THROWS_AS(render_spectrum_csv(bad), std::invalid_argument);
    RunConfig open_mode;
    open_mode.boundary = lattice::Boundary::open;
    CHECK_THROWS_AS(render_spectrum_csv(open_mode), std::invalid_argument);
}

TEST_CASE("weyl command: grids and the theta = h/ell wiring") {
    RunConfig cfg;
    cfg.n_sites = 4;
    cfg.theta_grid = Grid{0.0, 2.0 * kTwoPi, 2};  // {0, 2pi}
    const auto rows = lines_of(render_weyl_csv(cfg));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "theta,residual,wrap_defect");
    CHECK(std::stod(cells_of(rows[1])[1]) <= 1e-13);
    CHECK(std::stod(cells_of(rows[2])[1]) <= 1e-13);

    cfg.boundary = lattice::Boundary::open;
    cfg.theta_grid = Grid{0.0, 2.0 * kTwoPi, 17};
    for (std::size_t i = 1; i < 18; ++i)
        CHECK(std::stod(cells_of(lines_of(render_weyl_csv(cfg))[i])[1]) <= 1e-13);

    RunConfig grating;
    grating.n_sites = 4;
    grating.from_grating = true;
    grating.planck = 1.0;
    grating.ell = 0.5;
    const auto wired = lines_of(render_weyl_csv(grating));
    REQUIRE(wired.size() == 2);
    CHECK(cells_of(wired[1])[0] == "2");  // theta = h/ell = 2
}

TEST_CASE("diffraction command: AB columns and evanescent flags") {
    RunConfig cfg;
    cfg.lambda = 0.4;
    cfg.ell = 1.0;
    cfg.alpha = 0.0;
    cfg.orders = {-4, 4};
    const auto rows = lines_of(render_diffraction_csv(cfg));
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "n,angle,angle_ab,px,px_ab,evanescent");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = cells_of(rows[i]);
        CHECK(cells[1] == cells[2]);  // alpha = 0: identical columns
        const long n = std::stol(cells[0]);
        const bool evanescent = std::abs(static_cast<double>(n) * 0.4) > 1.0;
        CHECK(cells[5] == (evanescent ? "1" : "0"));
        if (evanescent) CHECK(cells[1] == "nan");
    }

    cfg.alpha = std::numbers::pi;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = cells_of(lines_of(render_diffraction_csv(cfg))[i]);
        CHECK(std::stod(cells[4]) - std::stod(cells[3]) == 0.5);  // half-quantum shift
    }
}

TEST_CASE("equivalence command: windings, phases, and the round-trip column") {
    RunConfig cfg;
    cfg.planck = 1.0;
    cfg.ell = 1.0;  // p0 = 1
    cfg.p_grid = Grid{-2.0, 3.0, 10};
    const auto rows = lines_of(render_equivalence_csv(cfg));
    CHECK(rows[0] == "p,p0,x,n,p1_over_p0,theta_reduced,rep_phase_re,rep_phase_im,roundtrip_error");
    bool saw_zero = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = cells_of(rows[i]);
        REQUIRE(cells.size() == 9);
        const double p = std::stod(cells[0]);
        CHECK(std::stol(cells[3]) == static_cast<long>(std::floor(p)));
        CHECK(std::stod(cells[8]) <= 1e-12);
        if (cells[0] == "0") {
            saw_zero = true;
            CHECK(cells[2] == "0");
            CHECK(cells[6] == "1");
            CHECK(cells[7] == "0");
        }
    }
    CHECK(saw_zero);

    // p0 = pi rows with winding 2 carry phase e^{i 2 pi} = 1 exactly
    RunConfig pi_cfg;
    pi_cfg.planck = std::numbers::pi;
    pi_cfg.ell = 1.0;
    pi_cfg.p_grid = Grid{2.0 * std::numbers::pi + 0.1, 3.0 * std::numbers::pi - 0.1, 4};
    for (std::size_t i = 1; i < 5; ++i) {
        const auto cells = cells_of(lines_of(render_equivalence_csv(pi_cfg))[i]);
        CHECK(cells[3] == "2");
        CHECK(cells[6] == "1");
        CHECK(cells[7] == "0");
    }
}

TEST_CASE("poset command emits parseable DOT") {
    RunConfig cfg;
    cfg.n_sites = 2;
    const auto rows = lines_of(render_poset_dot(cfg));
    CHECK(rows.front() == "digraph circle_poset {");
    CHECK(rows.back() == "}");
    int nodes = 0, edges = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const bool node_line = rows[i].find("[shape=") != std::string::npos;
        const bool edge_line = rows[i].find("->") != std::string::npos;
        CHECK(node_line != edge_line);  // each body line is exactly one of the two
        nodes += node_line ? 1 : 0;
        edges += edge_line ? 1 : 0;
    }
    CHECK(nodes == 4);
    CHECK(edges == 4);

    cfg.n_sites = 5;
    const auto larger = lines_of(render_poset_dot(cfg));
    CHECK(larger.size() == 2u + 10u + 10u);
}

TEST_CASE("convergence command: ratio near 4 and optional SVG") {
    RunConfig cfg;
    cfg.theta = std::numbers::pi / 3.0;
    cfg.sizes = {32, 64, 128};
    const auto output = render_convergence(cfg);
    const auto rows = lines_of(output.csv);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "N,error,ratio");
    CHECK(cells_of(rows[1])[2] == "nan");
    CHECK(std::stod(cells_of(rows[2])[2]) == doctest::Approx(4.0).epsilon(0.2));
    CHECK(std::stod(cells_of(rows[3])[2]) == doctest::Approx(4.0).epsilon(0.2));
    CHECK(output.svg.empty());

    cfg.svg_path = "unused.svg";
    const auto with_chart = render_convergence(cfg);
    CHECK(with_chart.svg.find("<svg") == 0);
    CHECK(with_chart.svg.find("<polyline") != std::string::npos);

    cfg.sizes = {4};
    CHECK_THROWS_AS(render_convergence(cfg), std::invalid_argument);
    cfg.sizes = {32, 32};
    CHECK_THROWS_AS(render_convergence(cfg), std::invalid_argument);
}

TEST_CASE("commands are deterministic and write the requested files") {
    for (int round = 0; round < 2; ++round) {
        RunConfig cfg;
        cfg.theta = 1.0;
        CHECK(render_spectrum_csv(cfg) == render_spectrum_csv(cfg));
        CHECK(render_weyl_csv(cfg) == render_weyl_csv(cfg));
        CHECK(render_diffraction_csv(cfg) == render_diffraction_csv(cfg));
        CHECK(render_equivalence_csv(cfg) == render_equivalence_csv(cfg));
        CHECK(render_poset_dot(cfg) == render_poset_dot(cfg));
    }

    const auto dir = std::filesystem::temp_directory_path() / "ncircle_cli_test";
    std::filesystem::create_directories(dir);
    RunConfig cfg;
    cfg.n_sites = 6;
    cfg.theta = 0.9;
    cfg.out_path = (dir / "spectrum.csv").string();
    CHECK(cmd_spectrum(cfg) == 0);
    std::ifstream in(cfg.out_path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == render_spectrum_csv(cfg));

    RunConfig dump = cfg;
    dump.n_sites = 3;
    dump.m = Complex(1.0, 0.0);
    dump.eps = 1.0;
    dump.out_path = (dir / "spectrum2.csv").string();
    dump.dump_operator_path = (dir / "operator.csv").string();
    CHECK(cmd_spectrum(dump) == 0);
    std::ifstream op(dump.dump_operator_path);
    REQUIRE(op.good());
    std::string first_line;
    std::getline(op, first_line);
    const auto entries = cells_of(first_line);
    REQUIRE(entries.size() == 3);           // one matrix row per line
    CHECK(entries[0] == "0+0i");            // re+imi rendering
    CHECK(entries[1].find('i') != std::string::npos);
    {
        const auto params = lattice::LatticeParams(3, lattice::Boundary::cyclic, 1.0,
                                                   Complex(1.0, 0.0));
        const auto h = gauge::gauged_dirac(lattice::build_dirac(params),
                                           gauge::build_connection(params, dump.theta));
        CHECK(entries[1] == io::format_complex(h(0, 1)));
    }

    RunConfig bad;
    bad.n_sites = 1;
    bad.out_path = (dir / "unwritten.csv").string();
    CHECK(cmd_spectrum(bad) == 1);
    CHECK(!std::filesystem::exists(bad.out_path));

    RunConfig unwritable;
    unwritable.out_path = (dir / "missing_dir" / "x.csv").string();
    CHECK(cmd_spectrum(unwritable) == 1);

    std::filesystem::remove_all(dir);
}
