#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vofdm/core.hpp"
#include "vofdm/errors.hpp"
#include "vofdm/precode.hpp"
#include "vofdm/types.hpp"

namespace vofdm {

enum class Constellation { bpsk, qpsk, explicit_list };

/// Deterministic symbol source. BPSK draws are exactly +1 or -1 (+0j),
/// QPSK draws are (+-1 +-j)/sqrt(2); explicit_list cycles the provided
/// symbols. The same seed yields the same draw sequence on every run of
/// the same build.
struct SymbolSource {
    Constellation kind = Constellation::bpsk;
    std::uint64_t seed = 0;
    std::vector<ComplexSample> symbols; // used by explicit_list only
};

/// Draw stream over a source. Constellation points are picked from raw
/// mt19937_64 output bits, so the sequence depends only on the seed.
class SymbolStream {
public:
    explicit SymbolStream(const SymbolSource& source)
        : kind_(source.kind), engine_(source.seed), symbols_(source.symbols) {
        if (kind_ == Constellation::explicit_list && symbols_.empty()) {
            throw SpecError("SymbolStream: explicit_list source has no symbols");
        }
    }

    ComplexSample next() {
        switch (kind_) {
        case Constellation::bpsk: {
            const bool bit = (engine_() >> 63) != 0;
            return bit ? ComplexSample{-1.0, 0.0} : ComplexSample{1.0, 0.0};
        }
        case Constellation::qpsk: {
            const std::uint64_t word = engine_();
            const double half = 1.0 / std::sqrt(2.0);
            const double re = (word >> 63) != 0 ? -half : half;
            const double im = ((word >> 62) & 1u) != 0 ? -half : half;
            return {re, im};
        }
        case Constellation::explicit_list: {
            const ComplexSample value = symbols_[pos_];
            pos_ = (pos_ + 1) % symbols_.size();
            return value;
        }
        }
        throw Error("SymbolStream: unknown constellation");
    }

private:
    Constellation kind_;
    std::mt19937_64 engine_;
    std::vector<ComplexSample> symbols_;
    std::size_t pos_ = 0;
};

/// Substream seed for an independent trial: the trial-th output of the
/// splitmix64 stream started at seed (closed form, since splitmix64
/// advances its state by a fixed increment per draw).
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Draws a SymbolGrid. Vectors listed in zero_vectors come out all zero.
/// For a vector with an entry in free_positions only those positions are
/// filled (the rest stay zero, pending precoding); vectors with no entry
/// are filled at every position. Draw order is ascending k, then
/// ascending n, and zero-filled positions consume no draws.
inline SymbolGrid draw_grid(const SymbolSource& source, const FrameParams& params,
                            const std::set<std::size_t>& zero_vectors = {},
                            const std::map<std::size_t, std::vector<std::size_t>>&
                                free_positions = {}) {
    for (std::size_t k : zero_vectors) {
        if (k >= params.ifft_size) {
            throw IndexError("draw_grid: zero vector index " + std::to_string(k) +
                             " out of range [0," + std::to_string(params.ifft_size) + ")");
        }
    }
    for (const auto& [k, positions] : free_positions) {
        if (k >= params.ifft_size) {
            throw IndexError("draw_grid: free-position vector index " + std::to_string(k) +
                             " out of range [0," + std::to_string(params.ifft_size) + ")");
        }
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (positions[i] >= params.vector_size) {
                throw IndexError("draw_grid: free position " + std::to_string(positions[i]) +
                                 " out of range [0," + std::to_string(params.vector_size) +
                                 ") for k=" + std::to_string(k));
            }
            if (i > 0 && positions[i] <= positions[i - 1]) {
                throw SpecError("draw_grid: free positions for k=" + std::to_string(k) +
                                " must be strictly increasing");
            }
        }
        if (!positions.empty() && zero_vectors.count(k) != 0) {
            throw SpecError("draw_grid: k=" + std::to_string(k) +
                            " is both zeroed and given free positions");
        }
    }

    SymbolStream stream(source);
    SymbolGrid grid = SymbolGrid::zeros(params);
    for (std::size_t k = 0; k < params.ifft_size; ++k) {
        if (zero_vectors.count(k) != 0) continue;
        auto it = free_positions.find(k);
        if (it == free_positions.end()) {
            for (std::size_t n = 0; n < params.vector_size; ++n) {
                grid.vectors[k][n] = stream.next();
            }
        } else {
            for (std::size_t n : it->second) grid.vectors[k][n] = stream.next();
        }
    }
    return grid;
}

/// Peak-to-average power ratio of the length-MN frame, no oversampling:
/// max_n |X(n)|^2 over mean_n |X(n)|^2, plus the same in dB.
struct Papr {
    double ratio = 0.0;
    double db = 0.0;
};

inline Papr papr(const TimeFrame& frame) {
    frame.validate("papr");
    double peak = 0.0;
    double sum = 0.0;
    for (const auto& v : frame.samples) {
        const double power = std::norm(v);
        peak = std::max(peak, power);
        sum += power;
    }
    if (peak == 0.0) {
        throw UndefinedPaprError("papr: undefined for an all-zero frame");
    }
    const double mean = sum / static_cast<double>(frame.samples.size());
    Papr result;
    result.ratio = peak / mean;
    result.db = 10.0 * std::log10(result.ratio);
    return result;
}

/// Null/precode position pattern stamped onto every vector of a k range.
struct NullTemplate {
    std::vector<std::size_t> null_positions;
    std::vector<std::size_t> precode_positions;
    SolveMode mode = SolveMode::exact;
};

/// Per-position averaged magnitudes of precoded symbol vectors.
struct MagnitudeStats {
    std::vector<double> per_position_mean; // length M
    std::size_t trials = 0;
    std::vector<std::size_t> k_range;
};

/// Monte Carlo mean of |x_k(n)| per position n, averaged over trials and
/// over the vectors in k_range, after precoding each of those vectors
/// with the template. Trial t draws a full grid from a source seeded
/// with trial_seed(source.seed, t); everything is a pure function of
/// (seed, params, template, trials, k_range).
inline MagnitudeStats averaged_magnitudes(const FrameParams& params,
                                          const NullTemplate& tmpl,
                                          const SymbolSource& source, std::size_t trials,
                                          const std::vector<std::size_t>& k_range) {
    if (trials < 1) throw SpecError("averaged_magnitudes: trials must be >= 1");
    if (k_range.empty()) throw SpecError("averaged_magnitudes: empty k range");
    for (std::size_t i = 0; i < k_range.size(); ++i) {
        if (k_range[i] >= params.ifft_size) {
            throw IndexError("averaged_magnitudes: k=" + std::to_string(k_range[i]) +
                             " out of range [0," + std::to_string(params.ifft_size) + ")");
        }
        if (i > 0 && k_range[i] <= k_range[i - 1]) {
            throw SpecError("averaged_magnitudes: k range must be strictly increasing");
        }
    }

    std::vector<NullSpec> specs;
    std::map<std::size_t, std::vector<std::size_t>> free_map;
    for (std::size_t k : k_range) {
        NullSpec spec;
        spec.k = k;
        spec.null_positions = tmpl.null_positions;
        spec.precode_positions = tmpl.precode_positions;
        spec.validate(params);
        free_map.emplace(k, detail::complement(spec.precode_positions, params.vector_size));
        if (!spec.null_positions.empty()) specs.push_back(std::move(spec));
    }

    std::vector<double> sums(params.vector_size, 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        SymbolSource trial_source = source;
        trial_source.seed = trial_seed(source.seed, t);
        const SymbolGrid drawn = draw_grid(trial_source, params, {}, free_map);
        const SymbolGrid precoded = [&]() -> SymbolGrid {
            try {
                return precode_grid(drawn, specs, tmpl.mode);
            } catch (const SingularError& e) {
                throw SingularError("averaged_magnitudes: trial " + std::to_string(t) + ": " +
                                        e.what(),
                                    e.condition_estimate);
            } catch (const Error& e) {
                throw Error("averaged_magnitudes: trial " + std::to_string(t) + ": " + e.what());
            }
        }();
        for (std::size_t k : k_range) {
            for (std::size_t n = 0; n < params.vector_size; ++n) {
                sums[n] += std::abs(precoded.vectors[k][n]);
            }
        }
    }

    MagnitudeStats stats;
    stats.trials = trials;
    stats.k_range = k_range;
    stats.per_position_mean.resize(params.vector_size);
    const double denom = static_cast<double>(trials) * static_cast<double>(k_range.size());
    for (std::size_t n = 0; n < params.vector_size; ++n) {
        stats.per_position_mean[n] = sums[n] / denom;
    }
    return stats;
}

} // namespace vofdm
