#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vofdm/errors.hpp"

namespace vofdm {

using ComplexSample = std::complex<double>;

namespace detail {

inline void require_finite(std::span<const ComplexSample> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
            throw ValueError(std::string(what) + ": non-finite sample at index " +
                             std::to_string(i));
        }
    }
}

inline double energy_of(std::span<const ComplexSample> values) {
    double acc = 0.0;
    for (const auto& v : values) acc += std::norm(v);
    return acc;
}

} // namespace detail

/// Frame geometry: vector size M and IFFT size N. Any M >= 1, N >= 1 is
/// legal, including the degenerate M = 1 (conventional OFDM) and N = 1
/// cases; no power-of-two restriction anywhere.
struct FrameParams {
    FrameParams(std::size_t vector_size_, std::size_t ifft_size_)
        : vector_size(vector_size_), ifft_size(ifft_size_) {
        if (vector_size < 1 || ifft_size < 1) {
            throw SizeError("FrameParams: vector size and IFFT size must be >= 1");
        }
    }

    std::size_t vector_size; // M
    std::size_t ifft_size;   // N

    std::size_t total() const { return vector_size * ifft_size; }

    // Flat index of X_{n2}(n1): time frames store whole vectors contiguously.
    std::size_t block_index(std::size_t n2, std::size_t n1) const {
        return n2 * vector_size + n1;
    }

    // Flat index of y_{k2}(k1): spectra store the components of each vector
    // N bins apart, so y_k occupies flat bins {k, k+N, ..., k+(M-1)N}.
    std::size_t stride_index(std::size_t k1, std::size_t k2) const {
        return k1 * ifft_size + k2;
    }

    bool operator==(const FrameParams&) const = default;
};

/// The N information symbol vectors x_k, each of length M; vectors[k][n]
/// holds x_k(n).
struct SymbolGrid {
    FrameParams params;
    std::vector<std::vector<ComplexSample>> vectors;

    static SymbolGrid zeros(const FrameParams& params) {
        SymbolGrid g{params, {}};
        g.vectors.assign(params.ifft_size,
                         std::vector<ComplexSample>(params.vector_size, ComplexSample{}));
        return g;
    }

    void validate(const char* what = "SymbolGrid") const {
        if (vectors.size() != params.ifft_size) {
            throw SizeError(std::string(what) + ": expected " +
                            std::to_string(params.ifft_size) + " symbol vectors, got " +
                            std::to_string(vectors.size()));
        }
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            if (vectors[k].size() != params.vector_size) {
                throw SizeError(std::string(what) + ": vector k=" + std::to_string(k) +
                                " has length " + std::to_string(vectors[k].size()) +
                                ", expected " + std::to_string(params.vector_size));
            }
            detail::require_finite(vectors[k], what);
        }
    }

    double energy() const {
        double acc = 0.0;
        for (const auto& v : vectors) acc += detail::energy_of(v);
        return acc;
    }
};

/// Length-MN discrete-time signal in block layout:
/// samples[n2*M + n1] = X_{n2}(n1).
struct TimeFrame {
    FrameParams params;
    std::vector<ComplexSample> samples;

    void validate(const char* what = "TimeFrame") const {
        if (samples.size() != params.total()) {
            throw SizeError(std::string(what) + ": expected " +
                            std::to_string(params.total()) + " samples for (M,N)=(" +
                            std::to_string(params.vector_size) + "," +
                            std::to_string(params.ifft_size) + "), got " +
                            std::to_string(samples.size()));
        }
        detail::require_finite(samples, what);
    }

    double energy() const { return detail::energy_of(samples); }
};

/// Length-MN discrete spectrum in stride layout:
/// bins[k1*N + k2] = y_{k2}(k1).
struct SpectrumFrame {
    FrameParams params;
    std::vector<ComplexSample> bins;

    void validate(const char* what = "SpectrumFrame") const {
        if (bins.size() != params.total()) {
            throw SizeError(std::string(what) + ": expected " +
                            std::to_string(params.total()) + " bins for (M,N)=(" +
                            std::to_string(params.vector_size) + "," +
                            std::to_string(params.ifft_size) + "), got " +
                            std::to_string(bins.size()));
        }
        detail::require_finite(bins, what);
    }

    double energy() const { return detail::energy_of(bins); }
};

} // namespace vofdm
