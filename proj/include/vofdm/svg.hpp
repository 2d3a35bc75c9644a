#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "vofdm/errors.hpp"
#include "vofdm/types.hpp"

namespace vofdm {

namespace detail {

inline std::string fmt_axis(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", value);
    return buf;
}

} // namespace detail

/// Writes a static per-index magnitude stem plot. Convenience output
/// only; the numeric CSV/JSON files are the authoritative artifacts.
inline void save_magnitude_svg(const std::filesystem::path& path,
                               std::span<const ComplexSample> values,
                               const std::string& title) {
    const int width = 960;
    const int height = 400;
    const int left = 60;
    const int right = 20;
    const int top = 40;
    const int bottom = 40;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double peak = 0.0;
    for (const auto& v : values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) peak = 1.0;

    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n"
        << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\""
        << width - right << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << height - bottom << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << top + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << detail::fmt_axis(peak) << "</text>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << height - bottom + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n"
        << "<text x=\"" << width - right << "\" y=\"" << height - bottom + 16
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << (values.empty() ? 0 : values.size() - 1) << "</text>\n";

    const double dx = values.size() > 1 ? plot_w / static_cast<double>(values.size() - 1)
                                        : 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = left + dx * static_cast<double>(i);
        const double magnitude = std::abs(values[i]);
        const double y = height - bottom - plot_h * (magnitude / peak);
        out << "<line x1=\"" << x << "\" y1=\"" << height - bottom << "\" x2=\"" << x
            << "\" y2=\"" << y << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n"
            << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"1.6\" fill=\"steelblue\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw Error("failed writing " + path.string());
}

inline void save_magnitude_svg(const std::filesystem::path& path,
                               std::span<const double> magnitudes,
                               const std::string& title) {
    std::vector<ComplexSample> values(magnitudes.size());
    for (std::size_t i = 0; i < magnitudes.size(); ++i) values[i] = {magnitudes[i], 0.0};
    save_magnitude_svg(path, values, title);
}

} // namespace vofdm
