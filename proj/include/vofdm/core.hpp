#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vofdm/dft.hpp"
#include "vofdm/errors.hpp"
#include "vofdm/types.hpp"

namespace vofdm {

/// VOFDM modulation: for each component index m, the length-N column
/// (x_0(m), ..., x_{N-1}(m)) goes through a unitary N-point inverse DFT,
/// and the results are written in block layout, samples[n*M + m] = X_n(m).
inline TimeFrame modulate(const SymbolGrid& grid) {
    grid.validate("modulate");
    const std::size_t m_size = grid.params.vector_size;
    const std::size_t n_size = grid.params.ifft_size;

    TimeFrame frame{grid.params, std::vector<ComplexSample>(grid.params.total())};
    std::vector<ComplexSample> column(n_size);
    for (std::size_t m = 0; m < m_size; ++m) {
        for (std::size_t k = 0; k < n_size; ++k) column[k] = grid.vectors[k][m];
        const auto transformed = unitary_dft(column, Direction::inverse);
        for (std::size_t n = 0; n < n_size; ++n) {
            frame.samples[grid.params.block_index(n, m)] = transformed[n];
        }
    }
    return frame;
}

/// Exact inverse of modulate: gathers each component stream out of the
/// block layout and applies the unitary forward N-point DFT.
inline SymbolGrid demodulate(const TimeFrame& frame) {
    frame.validate("demodulate");
    const std::size_t m_size = frame.params.vector_size;
    const std::size_t n_size = frame.params.ifft_size;

    SymbolGrid grid = SymbolGrid::zeros(frame.params);
    std::vector<ComplexSample> column(n_size);
    for (std::size_t m = 0; m < m_size; ++m) {
        for (std::size_t n = 0; n < n_size; ++n) {
            column[n] = frame.samples[frame.params.block_index(n, m)];
        }
        const auto transformed = unitary_dft(column, Direction::forward);
        for (std::size_t k = 0; k < n_size; ++k) grid.vectors[k][m] = transformed[k];
    }
    return grid;
}

/// Discrete spectrum of a frame: the unitary MN-point forward DFT of the
/// flat sample sequence. Bins come out in stride layout, bins[k1*N + k2]
/// = y_{k2}(k1).
inline SpectrumFrame spectrum(const TimeFrame& frame) {
    frame.validate("spectrum");
    return SpectrumFrame{frame.params, unitary_dft(frame.samples, Direction::forward)};
}

/// Extracts the spectrum vector y_k = (y_k(0), ..., y_k(M-1)), i.e. the
/// bins at flat indices k, k+N, ..., k+(M-1)N.
inline std::vector<ComplexSample> split_spectrum(const SpectrumFrame& s, std::size_t k) {
    s.validate("split_spectrum");
    if (k >= s.params.ifft_size) {
        throw IndexError("split_spectrum: k=" + std::to_string(k) + " out of range [0," +
                         std::to_string(s.params.ifft_size) + ")");
    }
    std::vector<ComplexSample> out(s.params.vector_size);
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] = s.bins[s.params.stride_index(m, k)];
    }
    return out;
}

/// Direct symbol-to-spectrum map: y_k equals the unitary M-point forward
/// DFT of the modulated vector xhat with xhat(n) = x(n) * W_{MN}^{nk}.
/// Agrees with split_spectrum(spectrum(modulate(grid)), k) up to round-off.
inline std::vector<ComplexSample> spectrum_map(std::span<const ComplexSample> x,
                                               std::size_t k,
                                               const FrameParams& params) {
    if (x.size() != params.vector_size) {
        throw SizeError("spectrum_map: expected vector of length " +
                        std::to_string(params.vector_size) + ", got " +
                        std::to_string(x.size()));
    }
    if (k >= params.ifft_size) {
        throw IndexError("spectrum_map: k=" + std::to_string(k) + " out of range [0," +
                         std::to_string(params.ifft_size) + ")");
    }
    detail::require_finite(x, "spectrum_map");

    const std::size_t total = params.total();
    std::vector<ComplexSample> modulated(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        modulated[n] = x[n] * detail::unit_root((n * k) % total, total, -1);
    }
    return unitary_dft(modulated, Direction::forward);
}

inline std::vector<ComplexSample> spectrum_map(const std::vector<ComplexSample>& x,
                                               std::size_t k,
                                               const FrameParams& params) {
    return spectrum_map(std::span<const ComplexSample>(x), k, params);
}

} // namespace vofdm
