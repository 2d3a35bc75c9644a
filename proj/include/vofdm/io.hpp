#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vofdm/errors.hpp"
#include "vofdm/simkit.hpp"
#include "vofdm/types.hpp"

namespace vofdm {

/// Declared ordering of the flat value list in a data file.
///   grid   - symbol vectors, values[k*M + n] = x_k(n)
///   block  - time frame,     values[n2*M + n1] = X_{n2}(n1)
///   stride - spectrum,       values[k1*N + k2] = y_{k2}(k1)
enum class Layout { grid, block, stride };

inline const char* layout_name(Layout layout) {
    switch (layout) {
    case Layout::grid: return "grid";
    case Layout::block: return "block";
    case Layout::stride: return "stride";
    }
    return "?";
}

inline std::optional<Layout> layout_from_name(const std::string& name) {
    if (name == "grid") return Layout::grid;
    if (name == "block") return Layout::block;
    if (name == "stride") return Layout::stride;
    return std::nullopt;
}

enum class FileFormat { csv, json };

inline FileFormat format_for_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".csv") return FileFormat::csv;
    if (ext == ".json") return FileFormat::json;
    throw ParseError("unrecognized file extension '" + ext + "' for " + path.string() +
                     " (expected .csv or .json)");
}

/// Full-precision decimal rendering (17 significant digits round-trips
/// any double exactly).
inline std::string fmt17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

struct FramePayload {
    FrameParams params;
    Layout layout;
    std::vector<ComplexSample> values;
};

namespace detail {

inline std::vector<ComplexSample> flatten_grid(const SymbolGrid& grid) {
    std::vector<ComplexSample> flat;
    flat.reserve(grid.params.total());
    for (const auto& vec : grid.vectors) flat.insert(flat.end(), vec.begin(), vec.end());
    return flat;
}

inline SymbolGrid unflatten_grid(const FrameParams& params,
                                 const std::vector<ComplexSample>& flat) {
    SymbolGrid grid = SymbolGrid::zeros(params);
    for (std::size_t k = 0; k < params.ifft_size; ++k) {
        for (std::size_t n = 0; n < params.vector_size; ++n) {
            grid.vectors[k][n] = flat[k * params.vector_size + n];
        }
    }
    return grid;
}

inline double parse_double(const std::string& field, const std::string& where) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(field, &consumed);
        if (consumed != field.size()) throw std::invalid_argument(field);
        return value;
    } catch (const std::exception&) {
        throw ParseError(where + ": cannot parse number '" + field + "'");
    }
}

} // namespace detail

inline void write_values_csv(std::ostream& out, std::span<const ComplexSample> values) {
    out << "flat_index,re,im,magnitude\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << i << ',' << fmt17(values[i].real()) << ',' << fmt17(values[i].imag()) << ','
            << fmt17(std::abs(values[i])) << '\n';
    }
}

inline nlohmann::json values_json(const FrameParams& params, Layout layout,
                                  std::span<const ComplexSample> values) {
    nlohmann::json data = nlohmann::json::array();
    for (const auto& v : values) data.push_back({v.real(), v.imag()});
    return nlohmann::json{{"params", {{"m", params.vector_size}, {"n", params.ifft_size}}},
                          {"layout", layout_name(layout)},
                          {"data", std::move(data)}};
}

inline void save_values(const std::filesystem::path& path, const FrameParams& params,
                        Layout layout, std::span<const ComplexSample> values,
                        FileFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    if (format == FileFormat::csv) {
        write_values_csv(out, values);
    } else {
        out << values_json(params, layout, values).dump(2) << '\n';
    }
    if (!out) throw Error("failed writing " + path.string());
}

/// Reads a flat value file back. CSV carries no geometry, so csv_params
/// is required for .csv inputs and the layout is taken from the caller;
/// JSON inputs must declare the expected layout in their envelope.
inline FramePayload load_values(const std::filesystem::path& path, Layout expected_layout,
                                std::optional<FrameParams> csv_params) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    const FileFormat format = format_for_path(path);

    if (format == FileFormat::json) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path.string() + ": " + e.what());
        }
        if (!doc.contains("params") || !doc.contains("layout") || !doc.contains("data")) {
            throw ParseError(path.string() + ": missing params/layout/data envelope");
        }
        const auto layout = layout_from_name(doc["layout"].get<std::string>());
        if (!layout) {
            throw ParseError(path.string() + ": unknown layout '" +
                             doc["layout"].get<std::string>() + "'");
        }
        if (*layout != expected_layout) {
            throw ParseError(path.string() + ": layout is '" + layout_name(*layout) +
                             "', expected '" + layout_name(expected_layout) + "'");
        }
        FrameParams params(doc["params"].at("m").get<std::size_t>(),
                           doc["params"].at("n").get<std::size_t>());
        if (csv_params && !(*csv_params == params)) {
            throw SizeError(path.string() + ": file geometry (M,N)=(" +
                            std::to_string(params.vector_size) + "," +
                            std::to_string(params.ifft_size) +
                            ") differs from requested (M,N)=(" +
                            std::to_string(csv_params->vector_size) + "," +
                            std::to_string(csv_params->ifft_size) + ")");
        }
        FramePayload payload{params, *layout, {}};
        payload.values.reserve(doc["data"].size());
        for (const auto& item : doc["data"]) {
            if (!item.is_array() || item.size() != 2) {
                throw ParseError(path.string() + ": data entries must be [re, im] pairs");
            }
            payload.values.emplace_back(item[0].get<double>(), item[1].get<double>());
        }
        if (payload.values.size() != params.total()) {
            throw SizeError(path.string() + ": expected " + std::to_string(params.total()) +
                            " values for (M,N)=(" + std::to_string(params.vector_size) +
                            "," + std::to_string(params.ifft_size) + "), got " +
                            std::to_string(payload.values.size()));
        }
        return payload;
    }

    if (!csv_params) {
        throw ParseError(path.string() + ": CSV input needs explicit frame geometry "
                                         "(pass --m and --n)");
    }
    FramePayload payload{*csv_params, expected_layout, {}};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("flat_index", 0) == 0) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        std::vector<std::string> fields;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 4) {
            throw ParseError(where + ": expected 4 columns (flat_index,re,im,magnitude), got " +
                             std::to_string(fields.size()));
        }
        const auto index = static_cast<std::size_t>(
            detail::parse_double(fields[0], where));
        if (index != payload.values.size()) {
            throw ParseError(where + ": flat_index " + fields[0] + " out of order, expected " +
                             std::to_string(payload.values.size()));
        }
        payload.values.emplace_back(detail::parse_double(fields[1], where),
                                    detail::parse_double(fields[2], where));
    }
    if (payload.values.size() != payload.params.total()) {
        throw SizeError(path.string() + ": expected " +
                        std::to_string(payload.params.total()) + " values for (M,N)=(" +
                        std::to_string(payload.params.vector_size) + "," +
                        std::to_string(payload.params.ifft_size) + "), got " +
                        std::to_string(payload.values.size()));
    }
    return payload;
}

// Typed wrappers.

inline void save_grid(const std::filesystem::path& path, const SymbolGrid& grid,
                      FileFormat format) {
    grid.validate("save_grid");
    save_values(path, grid.params, Layout::grid, detail::flatten_grid(grid), format);
}

inline void save_frame(const std::filesystem::path& path, const TimeFrame& frame,
                       FileFormat format) {
    frame.validate("save_frame");
    save_values(path, frame.params, Layout::block, frame.samples, format);
}

inline void save_spectrum(const std::filesystem::path& path, const SpectrumFrame& s,
                          FileFormat format) {
    s.validate("save_spectrum");
    save_values(path, s.params, Layout::stride, s.bins, format);
}

inline SymbolGrid load_grid(const std::filesystem::path& path,
                            std::optional<FrameParams> csv_params = std::nullopt) {
    const FramePayload payload = load_values(path, Layout::grid, csv_params);
    return detail::unflatten_grid(payload.params, payload.values);
}

inline TimeFrame load_frame(const std::filesystem::path& path,
                            std::optional<FrameParams> csv_params = std::nullopt) {
    FramePayload payload = load_values(path, Layout::block, csv_params);
    return TimeFrame{payload.params, std::move(payload.values)};
}

inline SpectrumFrame load_spectrum(const std::filesystem::path& path,
                                   std::optional<FrameParams> csv_params = std::nullopt) {
    FramePayload payload = load_values(path, Layout::stride, csv_params);
    return SpectrumFrame{payload.params, std::move(payload.values)};
}

inline void save_stats(const std::filesystem::path& path, const MagnitudeStats& stats,
                       FileFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    if (format == FileFormat::csv) {
        out << "position,mean_magnitude\n";
        for (std::size_t n = 0; n < stats.per_position_mean.size(); ++n) {
            out << n << ',' << fmt17(stats.per_position_mean[n]) << '\n';
        }
    } else {
        nlohmann::json doc{{"trials", stats.trials},
                           {"k_range", stats.k_range},
                           {"means", nlohmann::json::array()}};
        for (double mean : stats.per_position_mean) doc["means"].push_back(mean);
        out << doc.dump(2) << '\n';
    }
    if (!out) throw Error("failed writing " + path.string());
}

} // namespace vofdm
