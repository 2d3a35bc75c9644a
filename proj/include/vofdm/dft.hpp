#pragma once

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "vofdm/errors.hpp"
#include "vofdm/types.hpp"

namespace vofdm {

enum class Direction { forward, inverse };

namespace detail {

// e^{sign * 2*pi*j * num/den}. Callers reduce num mod den first so the
// polar argument stays small and full precision is kept at any length.
inline ComplexSample unit_root(std::size_t num, std::size_t den, int sign) {
    const double angle =
        static_cast<double>(sign) * 2.0 * std::numbers::pi *
        (static_cast<double>(num) / static_cast<double>(den));
    return std::polar(1.0, angle);
}

inline std::size_t smallest_factor(std::size_t n) {
    if (n % 2 == 0) return 2;
    for (std::size_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return d;
    }
    return n;
}

// Unnormalized length-n DFT of a strided sequence with kernel
// e^{sign*2*pi*j*t*k/n}. Cooley-Tukey split on the smallest prime factor,
// direct summation at prime lengths, so any n >= 1 is handled.
inline void dft_recursive(const ComplexSample* in, std::size_t stride,
                          std::size_t n, int sign, ComplexSample* out) {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const std::size_t p = smallest_factor(n);
    if (p == n) {
        for (std::size_t k = 0; k < n; ++k) {
            ComplexSample acc{};
            for (std::size_t t = 0; t < n; ++t) {
                acc += in[t * stride] * unit_root((t * k) % n, n, sign);
            }
            out[k] = acc;
        }
        return;
    }
    const std::size_t q = n / p;
    for (std::size_t r = 0; r < p; ++r) {
        dft_recursive(in + r * stride, stride * p, q, sign, out + r * q);
    }
    std::vector<ComplexSample> mixed(n);
    for (std::size_t k = 0; k < n; ++k) {
        ComplexSample acc{};
        for (std::size_t r = 0; r < p; ++r) {
            acc += unit_root((r * k) % n, n, sign) * out[r * q + k % q];
        }
        mixed[k] = acc;
    }
    std::copy(mixed.begin(), mixed.end(), out);
}

} // namespace detail

/// Unitary K-point DFT (forward kernel W_K^{nk} with W_K = e^{-2*pi*j/K})
/// or IDFT (kernel W_K^{-nk}), both scaled by 1/sqrt(K) so energy is
/// preserved and inverse(forward(v)) == v up to round-off.
inline std::vector<ComplexSample> unitary_dft(std::span<const ComplexSample> input,
                                              Direction direction) {
    const std::size_t n = input.size();
    if (n == 0) throw SizeError("unitary_dft: empty input");
    detail::require_finite(input, "unitary_dft");

    std::vector<ComplexSample> out(n);
    const int sign = direction == Direction::forward ? -1 : +1;
    detail::dft_recursive(input.data(), 1, n, sign, out.data());
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& v : out) v *= scale;
    return out;
}

inline std::vector<ComplexSample> unitary_dft(const std::vector<ComplexSample>& input,
                                              Direction direction) {
    return unitary_dft(std::span<const ComplexSample>(input), direction);
}

} // namespace vofdm
