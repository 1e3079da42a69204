#include "ncircle/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ncircle::io {

std::string format_g17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string format_complex(Complex value) {
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gi", value.real(), value.imag());
    return buffer;
}

std::string matrix_csv(const spectral::ComplexMatrix& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_complex(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string spectrum_report_csv(const gauge::ThetaSpectrumReport& report) {
    std::string out = "k,free,gauged,analytic,deviation\n";
    for (std::size_t k = 0; k < report.gauged_spectrum.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_g17(report.free_spectrum[k]);
        out += ',';
        out += format_g17(report.gauged_spectrum[k]);
        out += ',';
        out += format_g17(report.analytic_shifted[k]);
        out += ',';
        out += format_g17(std::abs(report.gauged_spectrum[k] - report.analytic_shifted[k]));
        out += '\n';
    }
    return out;
}

std::string weyl_reports_csv(std::span<const weyl::WeylReport> reports) {
    std::string out = "theta,residual,wrap_defect\n";
    for (const auto& r : reports) {
        out += format_g17(r.theta);
        out += ',';
        out += format_g17(r.residual);
        out += ',';
        out += format_g17(r.wrap_defect);
        out += '\n';
    }
    return out;
}

std::string poset_dot(const poset::CirclePoset& p) {
    std::string out = "digraph circle_poset {\n";
    for (int i = 0; i < p.point_count(); ++i) {
        out += "  p" + std::to_string(i);
        out += (i % 2 == 0) ? " [shape=box];\n" : " [shape=circle];\n";
    }
    for (const auto& [lo, hi] : poset::hasse_edges(p)) {
        out += "  p" + std::to_string(lo) + " -> p" + std::to_string(hi) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string polyline_svg(std::span<const std::pair<double, double>> points) {
    constexpr double width = 640.0;
    constexpr double height = 480.0;
    constexpr double margin = 0.1;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    if (!points.empty()) {
        x_min = x_max = points[0].first;
        y_min = y_max = points[0].second;
        for (const auto& [x, y] : points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const auto map_x = [&](double x) {
        return width * (margin + (1.0 - 2.0 * margin) * (x - x_min) / (x_max - x_min));
    };
    const auto map_y = [&](double y) {
        return height * (1.0 - margin - (1.0 - 2.0 * margin) * (y - y_min) / (y_max - y_min));
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg << "  <rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : points) {
        if (!first) svg << ' ';
        first = false;
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.6g,%.6g", map_x(x), map_y(y));
        svg << buffer;
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ncircle::io
