#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "ncircle/gauge.hpp"
#include "ncircle/poset.hpp"
#include "ncircle/weyl.hpp"

namespace ncircle::io {

// Numbers are rendered with 17 significant digits ("%.17g"), enough to make
// every CSV byte-stable across runs and round-trippable to the same double.
std::string format_g17(double value);

// "re+imi" rendering, e.g. "0.5-0.25i".
std::string format_complex(Complex value);

// One matrix row per line, entries comma-separated in re+imi form.
std::string matrix_csv(const spectral::ComplexMatrix& m);

// Header "k,free,gauged,analytic,deviation", one line per eigenvalue index.
std::string spectrum_report_csv(const gauge::ThetaSpectrumReport& report);

// Header "theta,residual,wrap_defect", one line per report.
std::string weyl_reports_csv(std::span<const weyl::WeylReport> reports);

// DOT digraph with one node per poset point and one lower->upper edge per cover.
std::string poset_dot(const poset::CirclePoset& p);

// Minimal single-polyline SVG chart of the given (x, y) points, mapped into a
// fixed 640x480 viewport with 10% margins.
std::string polyline_svg(std::span<const std::pair<double, double>> points);

// Writes the full string; throws std::runtime_error on any I/O failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ncircle::io
