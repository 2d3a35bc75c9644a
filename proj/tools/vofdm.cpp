// Command-line front end: canned experiment presets plus composable
// modulate/spectrum/precode/papr file pipelines. All numeric output is
// full-precision decimal and carries no timestamps, so identical
// invocations produce byte-identical files.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <vofdm/vofdm.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using vofdm::ComplexSample;
using vofdm::FileFormat;
using vofdm::FrameParams;
using vofdm::SymbolGrid;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 3;

struct RunOptions {
    std::string preset;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 3;
    std::size_t trials = 1000;
    fs::path out_dir = "out";
    FileFormat format = FileFormat::csv;
    bool plot = false;
};

const char* format_ext(FileFormat format) {
    return format == FileFormat::csv ? "csv" : "json";
}

// Applies "CLI flag beats config file beats preset default" for one knob.
// CLI11 has already written a given flag into the slot, so the slot is
// only replaced when the flag is absent.
template <typename T>
void layer_option(T& slot, const CLI::Option* flag, const json& config, const char* key,
                  const T& preset_default) {
    if (flag->count() > 0) return;
    if (config.contains(key)) {
        slot = config.at(key).get<T>();
        return;
    }
    slot = preset_default;
}

json load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw vofdm::ParseError("cannot open config " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw vofdm::ParseError(path.string() + ": " + e.what());
    }
}

std::vector<double> magnitudes_of(const std::vector<ComplexSample>& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(std::abs(v));
    return out;
}

struct CheckList {
    json entries = json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, const json& detail) {
        json entry = detail;
        entry["name"] = name;
        entry["pass"] = pass;
        entries.push_back(entry);
        all_pass = all_pass && pass;
    }
};

void write_summary(const fs::path& out_dir, const json& summary) {
    std::ofstream out(out_dir / "summary.json");
    if (!out) throw vofdm::Error("cannot open " + (out_dir / "summary.json").string());
    out << summary.dump(2) << '\n';
}

// Shared tail for the zero-vector presets: modulates, checks that the
// bins of the zeroed subcarriers vanished while everything else kept
// energy, and writes the artifact set.
int run_zero_vector_preset(const RunOptions& opt, std::size_t zero_count) {
    const FrameParams params(opt.m, opt.n);
    std::set<std::size_t> zeros;
    for (std::size_t k = 0; k < zero_count; ++k) zeros.insert(k);

    const vofdm::SymbolSource source{vofdm::Constellation::bpsk, opt.seed};
    const SymbolGrid grid = vofdm::draw_grid(source, params, zeros, {});
    const auto frame = vofdm::modulate(grid);
    const auto s = vofdm::spectrum(frame);

    double max_null = 0.0;
    double min_live = std::numeric_limits<double>::infinity();
    for (std::size_t k1 = 0; k1 < params.vector_size; ++k1) {
        for (std::size_t k2 = 0; k2 < params.ifft_size; ++k2) {
            const double magnitude = std::abs(s.bins[params.stride_index(k1, k2)]);
            if (zeros.count(k2) > 0) {
                max_null = std::max(max_null, magnitude);
            } else {
                min_live = std::min(min_live, magnitude);
            }
        }
    }

    const char* ext = format_ext(opt.format);
    vofdm::save_grid(opt.out_dir / ("grid." + std::string(ext)), grid, opt.format);
    vofdm::save_frame(opt.out_dir / ("frame." + std::string(ext)), frame, opt.format);
    vofdm::save_spectrum(opt.out_dir / ("spectrum." + std::string(ext)), s, opt.format);
    if (opt.plot) {
        vofdm::save_magnitude_svg(opt.out_dir / "spectrum.svg", s.bins,
                                  opt.preset + " spectrum magnitudes");
    }

    CheckList checks;
    checks.add("null_bins", max_null <= 1e-12,
               {{"max_null_magnitude", max_null}, {"tol", 1e-12}});
    checks.add("live_bins", min_live > 1e-3,
               {{"min_live_magnitude", min_live}, {"threshold", 1e-3}});

    json summary{{"preset", opt.preset},
                 {"params", {{"m", params.vector_size}, {"n", params.ifft_size}}},
                 {"seed", opt.seed},
                 {"zero_vectors", zero_count},
                 {"checks", checks.entries},
                 {"pass", checks.all_pass}};
    write_summary(opt.out_dir, summary);
    std::cout << opt.preset << ": max null-bin magnitude " << vofdm::fmt17(max_null)
              << (checks.all_pass ? " [pass]" : " [FAIL]") << "\n";
    return checks.all_pass ? kExitOk : kExitCheckFailed;
}

// Null-steering preset on one subcarrier: last two positions of x_k
// carry the solved symbols, 1000 seeded trials, per-trial end-to-end
// null verification plus averaged per-position magnitudes.
int run_null_steering_preset(const RunOptions& opt) {
    const FrameParams params(opt.m, opt.n);
    const std::size_t k = 1 % params.ifft_size;
    const vofdm::NullSpec spec = vofdm::NullSpec::trailing(k, 2, params.vector_size);
    const auto free_positions =
        vofdm::detail::complement(spec.precode_positions, params.vector_size);

    std::vector<std::size_t> null_bins;
    for (std::size_t z : spec.null_positions) null_bins.push_back(params.stride_index(z, k));

    const char* ext = format_ext(opt.format);
    double max_null = 0.0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        vofdm::SymbolSource trial{vofdm::Constellation::bpsk,
                                  vofdm::trial_seed(opt.seed, t)};
        const SymbolGrid grid =
            vofdm::draw_grid(trial, params, {}, {{k, free_positions}});
        const SymbolGrid solved = vofdm::precode_grid(grid, {spec}, vofdm::SolveMode::exact);
        const auto s = vofdm::spectrum(vofdm::modulate(solved));
        const auto report = vofdm::verify_nulls(s, null_bins, 1e-10);
        max_null = std::max(max_null, report.max_magnitude);

        if (t == 0) {
            vofdm::save_grid(opt.out_dir / ("grid_trial0." + std::string(ext)), grid,
                             opt.format);
            vofdm::save_grid(opt.out_dir / ("precoded_trial0." + std::string(ext)), solved,
                             opt.format);
            vofdm::save_spectrum(opt.out_dir / ("spectrum_trial0." + std::string(ext)), s,
                                 opt.format);
            if (opt.plot) {
                vofdm::save_magnitude_svg(opt.out_dir / "spectrum_trial0.svg", s.bins,
                                          opt.preset + " trial 0 spectrum magnitudes");
            }
        }
    }

    const vofdm::NullTemplate tmpl{spec.null_positions, spec.precode_positions,
                                   vofdm::SolveMode::exact};
    const auto stats = vofdm::averaged_magnitudes(
        params, tmpl, {vofdm::Constellation::bpsk, opt.seed}, opt.trials, {k});
    vofdm::save_stats(opt.out_dir / ("stats." + std::string(ext)), stats, opt.format);
    if (opt.plot) {
        vofdm::save_magnitude_svg(opt.out_dir / "stats.svg", stats.per_position_mean,
                                  opt.preset + " per-position mean magnitudes");
    }

    bool free_means_one = true;
    for (std::size_t n : free_positions) {
        free_means_one = free_means_one && stats.per_position_mean[n] == 1.0;
    }

    CheckList checks;
    checks.add("null_bins_every_trial", max_null <= 1e-10,
               {{"max_null_magnitude", max_null}, {"tol", 1e-10}, {"trials", opt.trials}});
    checks.add("free_position_means_exact_one", free_means_one,
               {{"means", stats.per_position_mean}});

    json summary{{"preset", opt.preset},
                 {"params", {{"m", params.vector_size}, {"n", params.ifft_size}}},
                 {"seed", opt.seed},
                 {"trials", opt.trials},
                 {"subcarrier", k},
                 {"null_positions", spec.null_positions},
                 {"precode_positions", spec.precode_positions},
                 {"mean_magnitudes", stats.per_position_mean},
                 {"checks", checks.entries},
                 {"pass", checks.all_pass}};
    write_summary(opt.out_dir, summary);
    std::cout << opt.preset << ": max null-bin magnitude " << vofdm::fmt17(max_null)
              << " over " << opt.trials << " trials"
              << (checks.all_pass ? " [pass]" : " [FAIL]") << "\n";
    return checks.all_pass ? kExitOk : kExitCheckFailed;
}

// Vector-size sweep of the null-steering preset: per-position averaged
// magnitudes for each M, everything else as in the single-M preset.
int run_size_sweep_preset(const RunOptions& opt, const std::vector<std::size_t>& m_values) {
    const char* ext = format_ext(opt.format);
    CheckList checks;
    json per_m = json::object();

    for (std::size_t m : m_values) {
        const FrameParams params(m, opt.n);
        const std::size_t k = 1 % params.ifft_size;
        const vofdm::NullSpec spec = vofdm::NullSpec::trailing(k, 2, m);
        const vofdm::NullTemplate tmpl{spec.null_positions, spec.precode_positions,
                                       vofdm::SolveMode::exact};
        const auto stats = vofdm::averaged_magnitudes(
            params, tmpl, {vofdm::Constellation::bpsk, opt.seed}, opt.trials, {k});

        const std::string stem = "stats_m" + std::to_string(m);
        vofdm::save_stats(opt.out_dir / (stem + "." + ext), stats, opt.format);
        if (opt.plot) {
            vofdm::save_magnitude_svg(opt.out_dir / (stem + ".svg"),
                                      stats.per_position_mean,
                                      opt.preset + " mean magnitudes, M=" +
                                          std::to_string(m));
        }

        bool free_means_one = true;
        for (std::size_t n = 0; n + 2 < m; ++n) {
            free_means_one = free_means_one && stats.per_position_mean[n] == 1.0;
        }
        checks.add("free_position_means_exact_one_m" + std::to_string(m), free_means_one,
                   {{"means", stats.per_position_mean}});
        per_m[std::to_string(m)] = stats.per_position_mean;
    }

    json summary{{"preset", opt.preset},
                 {"params", {{"n", opt.n}, {"m_sweep", m_values}}},
                 {"seed", opt.seed},
                 {"trials", opt.trials},
                 {"mean_magnitudes_by_m", per_m},
                 {"checks", checks.entries},
                 {"pass", checks.all_pass}};
    write_summary(opt.out_dir, summary);
    std::cout << opt.preset << ": " << m_values.size() << " vector sizes"
              << (checks.all_pass ? " [pass]" : " [FAIL]") << "\n";
    return checks.all_pass ? kExitOk : kExitCheckFailed;
}

// Upper-half band clearing: one trailing position per subcarrier in the
// top half, frame PAPR, and averaged magnitudes across that band.
int run_band_clear_preset(const RunOptions& opt) {
    const FrameParams params(opt.m, opt.n);
    const std::size_t k_lo = params.ifft_size / 2;
    std::vector<vofdm::NullSpec> specs;
    std::vector<std::size_t> k_range;
    std::vector<std::size_t> null_bins;
    for (std::size_t k = k_lo; k < params.ifft_size; ++k) {
        specs.push_back(vofdm::NullSpec::trailing(k, 1, params.vector_size));
        k_range.push_back(k);
        null_bins.push_back(params.stride_index(params.vector_size - 1, k));
    }
    const auto free_positions =
        vofdm::detail::complement(specs.front().precode_positions, params.vector_size);

    std::map<std::size_t, std::vector<std::size_t>> free_map;
    for (std::size_t k : k_range) free_map.emplace(k, free_positions);

    vofdm::SymbolSource trial0{vofdm::Constellation::bpsk, vofdm::trial_seed(opt.seed, 0)};
    const SymbolGrid grid = vofdm::draw_grid(trial0, params, {}, free_map);
    const SymbolGrid solved = vofdm::precode_grid(grid, specs, vofdm::SolveMode::exact);
    const auto frame = vofdm::modulate(solved);
    const auto s = vofdm::spectrum(frame);
    const auto report = vofdm::verify_nulls(s, null_bins, 1e-10);
    const auto peak = vofdm::papr(frame);

    const char* ext = format_ext(opt.format);
    vofdm::save_grid(opt.out_dir / ("grid_trial0." + std::string(ext)), grid, opt.format);
    vofdm::save_grid(opt.out_dir / ("precoded_trial0." + std::string(ext)), solved,
                     opt.format);
    vofdm::save_frame(opt.out_dir / ("frame_trial0." + std::string(ext)), frame, opt.format);
    vofdm::save_spectrum(opt.out_dir / ("spectrum_trial0." + std::string(ext)), s,
                         opt.format);
    if (opt.plot) {
        vofdm::save_magnitude_svg(opt.out_dir / "spectrum_trial0.svg", s.bins,
                                  opt.preset + " trial 0 spectrum magnitudes");
        vofdm::save_magnitude_svg(opt.out_dir / "frame_trial0.svg", frame.samples,
                                  opt.preset + " trial 0 frame magnitudes");
    }

    const vofdm::NullTemplate tmpl{specs.front().null_positions,
                                   specs.front().precode_positions, vofdm::SolveMode::exact};
    const auto stats = vofdm::averaged_magnitudes(
        params, tmpl, {vofdm::Constellation::bpsk, opt.seed}, opt.trials, k_range);
    vofdm::save_stats(opt.out_dir / ("stats." + std::string(ext)), stats, opt.format);
    if (opt.plot) {
        vofdm::save_magnitude_svg(opt.out_dir / "stats.svg", stats.per_position_mean,
                                  opt.preset + " per-position mean magnitudes");
    }

    bool free_means_one = true;
    for (std::size_t n : free_positions) {
        free_means_one = free_means_one && stats.per_position_mean[n] == 1.0;
    }
    const double solved_mean = stats.per_position_mean[params.vector_size - 1];

    CheckList checks;
    checks.add("cleared_band", report.max_magnitude <= 1e-10,
               {{"max_null_magnitude", report.max_magnitude}, {"tol", 1e-10}});
    checks.add("papr_at_least_one", peak.ratio >= 1.0,
               {{"papr", peak.ratio}, {"papr_db", peak.db}});
    checks.add("free_position_means_exact_one", free_means_one,
               {{"means", stats.per_position_mean}});
    checks.add("solved_position_mean_finite", std::isfinite(solved_mean),
               {{"mean", solved_mean}});

    json summary{{"preset", opt.preset},
                 {"params", {{"m", params.vector_size}, {"n", params.ifft_size}}},
                 {"seed", opt.seed},
                 {"trials", opt.trials},
                 {"cleared_subcarriers", {{"from", k_lo}, {"to", params.ifft_size - 1}}},
                 {"papr", peak.ratio},
                 {"papr_db", peak.db},
                 {"mean_magnitudes", stats.per_position_mean},
                 {"checks", checks.entries},
                 {"pass", checks.all_pass}};
    write_summary(opt.out_dir, summary);
    std::cout << opt.preset << ": papr " << vofdm::fmt17(peak.db) << " dB, max null "
              << vofdm::fmt17(report.max_magnitude)
              << (checks.all_pass ? " [pass]" : " [FAIL]") << "\n";
    return checks.all_pass ? kExitOk : kExitCheckFailed;
}

// Plain end-to-end pipeline with no structural checks, for ad-hoc sizes.
int run_custom_preset(const RunOptions& opt) {
    const FrameParams params(opt.m, opt.n);
    const vofdm::SymbolSource source{vofdm::Constellation::bpsk, opt.seed};
    const SymbolGrid grid = vofdm::draw_grid(source, params, {}, {});
    const auto frame = vofdm::modulate(grid);
    const auto s = vofdm::spectrum(frame);
    const auto peak = vofdm::papr(frame);

    const char* ext = format_ext(opt.format);
    vofdm::save_grid(opt.out_dir / ("grid." + std::string(ext)), grid, opt.format);
    vofdm::save_frame(opt.out_dir / ("frame." + std::string(ext)), frame, opt.format);
    vofdm::save_spectrum(opt.out_dir / ("spectrum." + std::string(ext)), s, opt.format);
    if (opt.plot) {
        vofdm::save_magnitude_svg(opt.out_dir / "spectrum.svg", s.bins,
                                  "custom spectrum magnitudes");
    }

    json summary{{"preset", opt.preset},
                 {"params", {{"m", params.vector_size}, {"n", params.ifft_size}}},
                 {"seed", opt.seed},
                 {"papr", peak.ratio},
                 {"papr_db", peak.db},
                 {"checks", json::array()},
                 {"pass", true}};
    write_summary(opt.out_dir, summary);
    std::cout << "custom: papr " << vofdm::fmt17(peak.db) << " dB [pass]\n";
    return kExitOk;
}

int run_preset(const RunOptions& opt) {
    fs::create_directories(opt.out_dir);
    if (opt.preset == "fig1" || opt.preset == "fig2") {
        return run_zero_vector_preset(opt, opt.preset == "fig1" ? 1 : 16);
    }
    if (opt.preset == "fig3") return run_null_steering_preset(opt);
    if (opt.preset == "fig3b") return run_size_sweep_preset(opt, {4, 8, 16, 32});
    if (opt.preset == "fig4suite") return run_band_clear_preset(opt);
    if (opt.preset == "custom") return run_custom_preset(opt);
    throw vofdm::SpecError("unknown preset " + opt.preset);
}

std::optional<FrameParams> geometry_from(const CLI::Option* m_opt, const CLI::Option* n_opt,
                                         std::size_t m, std::size_t n) {
    if (m_opt->count() > 0 || n_opt->count() > 0) {
        if (m_opt->count() == 0 || n_opt->count() == 0) {
            throw vofdm::SpecError("--m and --n must be given together");
        }
        return FrameParams(m, n);
    }
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete vector-OFDM frames, spectra, and spectral-null precoding"};
    app.require_subcommand(1);

    // run
    RunOptions run;
    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "run an experiment preset");
    run_cmd->add_option("preset", run.preset, "fig1|fig2|fig3|fig3b|fig4suite|custom")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig3b", "fig4suite", "custom"}));
    auto* run_m = run_cmd->add_option("--m", run.m, "vector size M");
    auto* run_n = run_cmd->add_option("--n", run.n, "IFFT size N");
    auto* run_seed = run_cmd->add_option("--seed", run.seed, "base RNG seed");
    auto* run_trials = run_cmd->add_option("--trials", run.trials, "Monte Carlo trials");
    auto* run_out = run_cmd->add_option("--out", run.out_dir, "output directory");
    std::string run_format = "csv";
    auto* run_format_opt =
        run_cmd->add_option("--format", run_format, "data file format (csv|json)")
            ->check(CLI::IsMember({"csv", "json"}));
    std::string run_plot;
    auto* run_plot_opt = run_cmd->add_option("--plot", run_plot, "emit plots (svg)")
                             ->check(CLI::IsMember({"svg"}));
    run_cmd->add_option("--config", config_path, "JSON config file (flags override it)");

    // modulate / spectrum / precode / papr share these
    struct PipeArgs {
        std::string in;
        std::string out;
        std::size_t m = 0;
        std::size_t n = 0;
    };

    auto add_pipe_options = [](CLI::App* cmd, PipeArgs& args, bool needs_out) {
        cmd->add_option("--in", args.in, "input file (.csv or .json)")->required();
        auto* out_opt = cmd->add_option("--out", args.out, "output file (.csv or .json)");
        if (needs_out) out_opt->required();
        auto* m_opt = cmd->add_option("--m", args.m, "vector size M (required for CSV input)");
        auto* n_opt = cmd->add_option("--n", args.n, "IFFT size N (required for CSV input)");
        return std::pair{m_opt, n_opt};
    };

    PipeArgs mod_args;
    auto* mod_cmd = app.add_subcommand("modulate", "symbol grid file -> time frame file");
    auto [mod_m, mod_n] = add_pipe_options(mod_cmd, mod_args, true);

    PipeArgs spec_args;
    auto* spec_cmd = app.add_subcommand("spectrum", "time frame file -> spectrum file");
    auto [spec_m, spec_n] = add_pipe_options(spec_cmd, spec_args, true);

    PipeArgs pre_args;
    std::size_t pre_k = 0;
    std::vector<std::size_t> pre_null;
    std::vector<std::size_t> pre_precode;
    std::string pre_mode = "exact";
    auto* pre_cmd = app.add_subcommand("precode", "solve trailing positions of one "
                                                  "subcarrier to null chosen spectrum bins");
    auto [pre_m, pre_n] = add_pipe_options(pre_cmd, pre_args, true);
    pre_cmd->add_option("--k", pre_k, "subcarrier index")->required();
    pre_cmd->add_option("--null", pre_null, "positions to null (comma separated)")
        ->required()
        ->delimiter(',');
    pre_cmd->add_option("--precode", pre_precode,
                        "positions to solve (comma separated, default = --null)")
        ->delimiter(',');
    pre_cmd->add_option("--mode", pre_mode, "exact|min-norm")
        ->check(CLI::IsMember({"exact", "min-norm"}));

    PipeArgs papr_args;
    auto* papr_cmd = app.add_subcommand("papr", "peak-to-average power ratio of a frame");
    auto [papr_m, papr_n] = add_pipe_options(papr_cmd, papr_args, false);

    try {
        app.parse(argc, argv);

        if (run_cmd->parsed()) {
            std::size_t default_m = 8;
            std::size_t default_n = 64;
            if (run.preset == "fig1") {
                default_m = 4;
                default_n = 4;
            }

            json config = json::object();
            if (!config_path.empty()) config = load_config(config_path);
            layer_option(run.m, run_m, config, "m", default_m);
            layer_option(run.n, run_n, config, "n", default_n);
            layer_option(run.seed, run_seed, config, "seed", std::uint64_t{3});
            layer_option(run.trials, run_trials, config, "trials", std::size_t{1000});
            layer_option(run_format, run_format_opt, config, "format", std::string("csv"));
            if (run_plot_opt->count() == 0 && config.contains("plot")) {
                run_plot = config.at("plot").get<std::string>();
            }
            std::string out_str = "out";
            if (run_out->count() > 0) {
                out_str = run.out_dir.string();
            } else if (config.contains("out")) {
                out_str = config.at("out").get<std::string>();
            }
            run.out_dir = out_str;
            run.format = run_format == "json" ? FileFormat::json : FileFormat::csv;
            run.plot = run_plot == "svg";
            return run_preset(run);
        }

        if (mod_cmd->parsed()) {
            const auto geometry = geometry_from(mod_m, mod_n, mod_args.m, mod_args.n);
            const SymbolGrid grid = vofdm::load_grid(mod_args.in, geometry);
            const auto frame = vofdm::modulate(grid);
            vofdm::save_frame(mod_args.out, frame, vofdm::format_for_path(mod_args.out));
            return kExitOk;
        }

        if (spec_cmd->parsed()) {
            const auto geometry = geometry_from(spec_m, spec_n, spec_args.m, spec_args.n);
            const auto frame = vofdm::load_frame(spec_args.in, geometry);
            const auto s = vofdm::spectrum(frame);
            vofdm::save_spectrum(spec_args.out, s, vofdm::format_for_path(spec_args.out));
            return kExitOk;
        }

        if (pre_cmd->parsed()) {
            const auto geometry = geometry_from(pre_m, pre_n, pre_args.m, pre_args.n);
            const SymbolGrid grid = vofdm::load_grid(pre_args.in, geometry);
            vofdm::NullSpec spec;
            spec.k = pre_k;
            spec.null_positions = pre_null;
            spec.precode_positions = pre_precode.empty() ? pre_null : pre_precode;
            const auto mode = pre_mode == "min-norm" ? vofdm::SolveMode::min_norm
                                                     : vofdm::SolveMode::exact;
            const SymbolGrid solved = vofdm::precode_grid(grid, {spec}, mode);
            vofdm::save_grid(pre_args.out, solved, vofdm::format_for_path(pre_args.out));
            return kExitOk;
        }

        if (papr_cmd->parsed()) {
            const auto geometry = geometry_from(papr_m, papr_n, papr_args.m, papr_args.n);
            const auto frame = vofdm::load_frame(papr_args.in, geometry);
            const auto peak = vofdm::papr(frame);
            std::cout << "papr " << vofdm::fmt17(peak.ratio) << "\n"
                      << "papr_db " << vofdm::fmt17(peak.db) << "\n";
            if (!papr_args.out.empty()) {
                json doc{{"papr", peak.ratio}, {"papr_db", peak.db}};
                std::ofstream out(papr_args.out);
                if (!out) throw vofdm::Error("cannot open " + papr_args.out);
                out << doc.dump(2) << '\n';
            }
            return kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const vofdm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
