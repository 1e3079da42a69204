// ncircle command line front end. Subcommands render deterministic CSV/DOT/SVG
// artifacts from the lattice, gauge, Weyl, diffraction, and equivalence
// machinery. Flags take precedence over an optional flat JSON config file.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncircle/commands.hpp"

namespace {

using ncircle::cli::Grid;
using ncircle::cli::RunConfig;

struct CommandLine {
    RunConfig cfg;
    // raw string holders for the composite flags
    std::string m_text;
    std::string boundary_text = "cyclic";
    std::string sigma_text = "per-step";
    std::string theta_grid_text;
    std::string orders_text;
    std::string p_grid_text;
    std::string sizes_text;
    std::string config_path;
    double eps_value = 0.0;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw CLI::ValidationError(what, "cannot parse '" + text + "'");
    }
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::int64_t value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw CLI::ValidationError(what, "cannot parse '" + text + "'");
    }
}

Grid parse_grid(const std::string& text, const std::string& what) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw CLI::ValidationError(what, "expected a:b:steps");
    Grid g;
    g.start = parse_double(parts[0], what);
    g.stop = parse_double(parts[1], what);
    g.steps = static_cast<int>(parse_int(parts[2], what));
    return g;
}

// Registers the flag set shared by every subcommand.
void add_common_options(CLI::App* sub, CommandLine& state) {
    sub->set_help_flag("--help", "print this help and exit");  // frees --h for Planck's h
    sub->add_option("--n", state.cfg.n_sites, "lattice cells / sites N");
    sub->add_option("--eps", state.eps_value, "lattice spacing (default sqrt(2)/N)");
    sub->add_option("--m", state.m_text, "hopping phase as re,im (default 0,1)");
    sub->add_option("--boundary", state.boundary_text, "cyclic|open")
        ->check(CLI::IsMember({"cyclic", "open"}));
    sub->add_option("--sigma", state.sigma_text, "connection twist: per-step|paper")
        ->check(CLI::IsMember({"per-step", "paper"}));
    sub->add_option("--theta", state.cfg.theta, "holonomy angle");
    sub->add_option("--theta-grid", state.theta_grid_text, "theta sweep a:b:steps");
    sub->add_option("--lambda", state.cfg.lambda, "electron wavelength");
    sub->add_option("--ell", state.cfg.ell, "slit spacing");
    sub->add_option("--h", state.cfg.planck, "action quantum h");
    sub->add_option("--alpha", state.cfg.alpha, "Aharonov-Bohm phase e Phi_B/(hbar c)");
    sub->add_flag("--from-grating", state.cfg.from_grating, "set theta = h/ell");
    sub->add_option("--out", state.cfg.out_path, "output path (default stdout)");
    sub->add_option("--svg", state.cfg.svg_path, "SVG chart path (convergence only)");
    sub->add_option("--config", state.config_path, "flat JSON config file");
}

void finalize_config(CommandLine& state, const CLI::App& active) {
    if (active.count("--eps") > 0) state.cfg.eps = state.eps_value;
    if (!state.m_text.empty()) {
        const auto parts = split(state.m_text, ',');
        if (parts.size() != 2) throw CLI::ValidationError("--m", "expected re,im");
        state.cfg.m = ncircle::Complex(parse_double(parts[0], "--m"),
                                       parse_double(parts[1], "--m"));
    }
    state.cfg.boundary = (state.boundary_text == "open") ? ncircle::lattice::Boundary::open
                                                         : ncircle::lattice::Boundary::cyclic;
    state.cfg.sigma = (state.sigma_text == "paper")
                          ? ncircle::gauge::SigmaConvention::paper_literal
                          : ncircle::gauge::SigmaConvention::per_step;
    if (active.count("--theta-grid") > 0)
        state.cfg.theta_grid = parse_grid(state.theta_grid_text, "--theta-grid");
    if (!state.orders_text.empty()) {
        const auto parts = split(state.orders_text, ':');
        if (parts.size() != 2) throw CLI::ValidationError("--orders", "expected a:b");
        state.cfg.orders = {parse_int(parts[0], "--orders"), parse_int(parts[1], "--orders")};
    }
    if (!state.p_grid_text.empty()) state.cfg.p_grid = parse_grid(state.p_grid_text, "--p-grid");
    if (!state.sizes_text.empty()) {
        state.cfg.sizes.clear();
        for (const auto& part : split(state.sizes_text, ','))
            state.cfg.sizes.push_back(static_cast<int>(parse_int(part, "--sizes")));
    }
}

// Flat JSON config: every key must be a long option of the active subcommand;
// keys already given on the command line are ignored (flags win).
std::vector<std::string> inject_config(const std::vector<std::string>& tokens,
                                       const CLI::App& app) {
    std::string config_path;
    std::string subcommand;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (subcommand.empty() && !t.empty() && t[0] != '-') subcommand = t;
        if (t == "--config" && i + 1 < tokens.size()) config_path = tokens[i + 1];
        if (t.rfind("--config=", 0) == 0) config_path = t.substr(9);
    }
    if (config_path.empty() || subcommand.empty()) return tokens;
    const CLI::App* sub = nullptr;
    for (const CLI::App* candidate : app.get_subcommands(nullptr))
        if (candidate->get_name() == subcommand) sub = candidate;
    if (sub == nullptr) return tokens;

    std::set<std::string> known;
    for (const CLI::Option* opt : sub->get_options())
        for (const auto& name : opt->get_lnames()) known.insert(name);

    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config parse error: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw std::runtime_error("config must be a flat JSON object");

    auto given = [&tokens](const std::string& key) {
        const std::string flag = "--" + key;
        for (const auto& t : tokens)
            if (t == flag || t.rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    std::vector<std::string> augmented = tokens;
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) throw std::runtime_error("unknown config key: " + key);
        if (given(key)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) augmented.push_back("--" + key);
        } else if (value.is_string()) {
            augmented.push_back("--" + key + "=" + value.get<std::string>());
        } else if (value.is_number()) {
            char buffer[40];
            std::snprintf(buffer, sizeof(buffer), "%.17g", value.get<double>());
            augmented.push_back("--" + key + "=" + std::string(buffer));
        } else {
            throw std::runtime_error("config key '" + key + "' must be scalar");
        }
    }
    return augmented;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative circle-poset lattice toolkit"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    CommandLine state;
    auto* spectrum = app.add_subcommand(
        "spectrum", "free vs gauged vs analytic Dirac spectra (CSV)");
    add_common_options(spectrum, state);
    spectrum->add_flag("--laplacian", state.cfg.laplacian_mode,
                       "report Laplacian spectra instead of Dirac spectra");
    spectrum->add_option("--dump-operator", state.cfg.dump_operator_path,
                         "also write D+rho as re+imi CSV");

    auto* weyl = app.add_subcommand("weyl", "Weyl relation residual sweep (CSV)");
    add_common_options(weyl, state);

    auto* diffraction =
        app.add_subcommand("diffraction", "grating orders with and without solenoids (CSV)");
    add_common_options(diffraction, state);
    diffraction->add_option("--orders", state.orders_text, "order range a:b (default -5:5)");

    auto* equivalence =
        app.add_subcommand("equivalence", "momentum to circle-variable map (CSV)");
    add_common_options(equivalence, state);
    equivalence->add_option("--p-grid", state.p_grid_text,
                            "momentum sweep a:b:steps (default -3:3:13)");

    auto* poset = app.add_subcommand("poset", "Hasse diagram of the 2N-point circle poset (DOT)");
    add_common_options(poset, state);

    auto* convergence =
        app.add_subcommand("convergence", "lattice-to-continuum eigenvalue errors (CSV)");
    add_common_options(convergence, state);
    convergence->add_option("--sizes", state.sizes_text,
                            "comma-separated lattice sizes (default 32,64,128,256)");

    std::vector<std::string> tokens(argv + 1, argv + argc);
    try {
        tokens = inject_config(tokens, app);
    } catch (const std::exception& e) {
        std::cerr << "ncircle: " << e.what() << '\n';
        return 1;
    }

    try {
        std::reverse(tokens.begin(), tokens.end());  // CLI11 takes a reversed vector
        app.parse(std::move(tokens));
        const auto active = app.get_subcommands();
        if (!active.empty()) finalize_config(state, *active.front());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (spectrum->parsed()) return ncircle::cli::cmd_spectrum(state.cfg);
    if (weyl->parsed()) return ncircle::cli::cmd_weyl(state.cfg);
    if (diffraction->parsed()) return ncircle::cli::cmd_diffraction(state.cfg);
    if (equivalence->parsed()) return ncircle::cli::cmd_equivalence(state.cfg);
    if (poset->parsed()) return ncircle::cli::cmd_poset(state.cfg);
    if (convergence->parsed()) return ncircle::cli::cmd_convergence(state.cfg);
    std::cerr << "ncircle: no subcommand selected\n";
    return 1;
}
