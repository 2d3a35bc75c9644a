#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "vofdm/core.hpp"
#include "vofdm/dft.hpp"
#include "vofdm/errors.hpp"
#include "vofdm/types.hpp"

namespace vofdm {

/// Condition estimates above this declare the nulling system rank deficient.
inline constexpr double kSingularConditionLimit = 1e12;

enum class SolveMode { exact, min_norm };

/// Which spectrum components of y_k are forced to zero (null_positions, Z)
/// and which entries of x_k are given up to the solver (precode_positions,
/// P). Both sets are strictly increasing; solvability needs |P| >= |Z|.
/// The one-block default has Z and P both equal to the last p indices.
struct NullSpec {
    std::size_t k = 0;
    std::vector<std::size_t> null_positions;
    std::vector<std::size_t> precode_positions;

    /// Z = P = {M-count, ..., M-1}.
    static NullSpec trailing(std::size_t k, std::size_t count, std::size_t vector_size) {
        NullSpec spec;
        spec.k = k;
        if (count > vector_size) {
            throw SpecError("NullSpec::trailing: count exceeds vector size");
        }
        for (std::size_t i = vector_size - count; i < vector_size; ++i) {
            spec.null_positions.push_back(i);
            spec.precode_positions.push_back(i);
        }
        return spec;
    }

    void validate(const FrameParams& params) const {
        if (k >= params.ifft_size) {
            throw IndexError("NullSpec: k=" + std::to_string(k) + " out of range [0," +
                             std::to_string(params.ifft_size) + ")");
        }
        auto check_set = [&](const std::vector<std::size_t>& set, const char* name) {
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (set[i] >= params.vector_size) {
                    throw IndexError(std::string("NullSpec: ") + name + " index " +
                                     std::to_string(set[i]) + " out of range [0," +
                                     std::to_string(params.vector_size) + ")");
                }
                if (i > 0 && set[i] <= set[i - 1]) {
                    throw SpecError(std::string("NullSpec: ") + name +
                                    " must be strictly increasing");
                }
            }
        };
        check_set(null_positions, "null_positions");
        check_set(precode_positions, "precode_positions");
        if (precode_positions.size() < null_positions.size()) {
            throw SpecError("NullSpec: infeasible for k=" + std::to_string(k) + ": " +
                            std::to_string(precode_positions.size()) +
                            " precode positions cannot satisfy " +
                            std::to_string(null_positions.size()) + " nulls");
        }
    }
};

namespace detail {

inline std::vector<std::size_t> complement(const std::vector<std::size_t>& sorted_set,
                                           std::size_t size) {
    std::vector<std::size_t> out;
    out.reserve(size - sorted_set.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < size; ++i) {
        if (next < sorted_set.size() && sorted_set[next] == i) {
            ++next;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace detail

/// The unitary M-point DFT matrix, entries (1/sqrt(M)) * W_M^{mn}.
inline Eigen::MatrixXcd unitary_dft_matrix(std::size_t m) {
    if (m < 1) throw SizeError("unitary_dft_matrix: size must be >= 1");
    Eigen::MatrixXcd w(m, m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
            w(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                scale * detail::unit_root((row * col) % m, m, -1);
        }
    }
    return w;
}

/// Column split of the M-point DFT matrix and the identity: dft_precode
/// keeps the columns in P, id_null the columns in Z, and dft_free/id_free
/// the respective complements. The |P| = |Z| trailing-block case makes
/// dft_precode and id_null the same width.
struct DftPartition {
    std::size_t size = 0;
    Eigen::MatrixXcd dft_free;    // W_{M,1}
    Eigen::MatrixXcd dft_precode; // W_{M,2}
    Eigen::MatrixXcd id_free;     // I_{M,1}
    Eigen::MatrixXcd id_null;     // I_{M,2}
};

inline DftPartition partition_dft(const NullSpec& spec, const FrameParams& params) {
    spec.validate(params);
    const std::size_t m = params.vector_size;
    const Eigen::MatrixXcd w = unitary_dft_matrix(m);
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(
        static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));

    auto take_columns = [m](const Eigen::MatrixXcd& src,
                            const std::vector<std::size_t>& cols) {
        Eigen::MatrixXcd out(static_cast<Eigen::Index>(m),
                             static_cast<Eigen::Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.col(static_cast<Eigen::Index>(j)) =
                src.col(static_cast<Eigen::Index>(cols[j]));
        }
        return out;
    };

    DftPartition part;
    part.size = m;
    part.dft_precode = take_columns(w, spec.precode_positions);
    part.dft_free = take_columns(w, detail::complement(spec.precode_positions, m));
    part.id_null = take_columns(identity, spec.null_positions);
    part.id_free = take_columns(identity, detail::complement(spec.null_positions, m));
    return part;
}

/// The nulling constraints as a dense linear system over the modulated
/// entries xhat(n) = x(n) * W_{MN}^{nk}:
///
///   constraint * xhat_P = rhs(info),   constraint[i][j] = (1/sqrt(M)) W_M^{Z_i P_j}
///
/// with rhs(info) = -sum_{n not in P} W_M[Z, n] * xhat(n). Rows are the
/// m in Z of the full DFT relation y_k = W_M * xhat; the rows outside Z
/// give the realized free spectrum values.
struct PrecodeSystem {
    FrameParams params;
    std::size_t k = 0;
    std::vector<std::size_t> null_positions;
    std::vector<std::size_t> precode_positions;
    std::vector<std::size_t> free_positions; // complement of P, ascending
    Eigen::MatrixXcd constraint;             // |Z| x |P|
    Eigen::MatrixXcd rhs_basis;              // |Z| x (M - |P|)

    /// Maps the information entries (positions outside P) to the
    /// right-hand side. info must supply exactly the free positions.
    Eigen::VectorXcd rhs(const std::map<std::size_t, ComplexSample>& info) const {
        Eigen::VectorXcd modulated = modulated_info(info);
        if (rhs_basis.cols() == 0) {
            return Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(null_positions.size()));
        }
        return rhs_basis * modulated;
    }

    Eigen::VectorXcd modulated_info(const std::map<std::size_t, ComplexSample>& info) const {
        if (info.size() != free_positions.size()) {
            throw SpecError("precode: info must supply exactly the " +
                            std::to_string(free_positions.size()) +
                            " positions outside the precode set, got " +
                            std::to_string(info.size()));
        }
        const std::size_t total = params.total();
        Eigen::VectorXcd out(static_cast<Eigen::Index>(free_positions.size()));
        for (std::size_t j = 0; j < free_positions.size(); ++j) {
            const std::size_t n = free_positions[j];
            auto it = info.find(n);
            if (it == info.end()) {
                throw SpecError("precode: missing information symbol at position " +
                                std::to_string(n));
            }
            if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag())) {
                throw ValueError("precode: non-finite information symbol at position " +
                                 std::to_string(n));
            }
            out(static_cast<Eigen::Index>(j)) =
                it->second * detail::unit_root((n * k) % total, total, -1);
        }
        return out;
    }
};

inline PrecodeSystem build_system(const NullSpec& spec, const FrameParams& params) {
    spec.validate(params);
    const DftPartition part = partition_dft(spec, params);

    PrecodeSystem sys{params, spec.k, spec.null_positions, spec.precode_positions,
                      detail::complement(spec.precode_positions, params.vector_size),
                      {}, {}};
    const auto rows = static_cast<Eigen::Index>(spec.null_positions.size());
    sys.constraint.resize(rows, part.dft_precode.cols());
    sys.rhs_basis.resize(rows, part.dft_free.cols());
    for (std::size_t i = 0; i < spec.null_positions.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(spec.null_positions[i]);
        sys.constraint.row(static_cast<Eigen::Index>(i)) = part.dft_precode.row(row);
        sys.rhs_basis.row(static_cast<Eigen::Index>(i)) = -part.dft_free.row(row);
    }
    return sys;
}

/// Solved precoding result. Entries of full_x outside P are the input
/// information symbols, bit for bit; entries at P are the solved symbols
/// after removing the W_{MN}^{nk} modulation. realized_y_free lists
/// y_k(m) for m outside Z in ascending m, and residual is the largest
/// |y_k(m)| left over the null set, both recomputed through spectrum_map.
struct PrecodeSolution {
    std::vector<ComplexSample> full_x;
    std::vector<ComplexSample> realized_y_free;
    double residual = 0.0;
    double condition_estimate = 0.0; // 0 when no solve was needed
    bool used_min_norm = false;
};

inline PrecodeSolution precode(const std::map<std::size_t, ComplexSample>& info,
                               const NullSpec& spec, const FrameParams& params,
                               SolveMode mode) {
    const PrecodeSystem sys = build_system(spec, params);
    const std::size_t n_null = spec.null_positions.size();
    const std::size_t n_precode = spec.precode_positions.size();

    if (mode == SolveMode::exact && n_precode != n_null) {
        throw SpecError("precode: exact mode needs |P| == |Z| for k=" +
                        std::to_string(spec.k) + ", got |P|=" + std::to_string(n_precode) +
                        ", |Z|=" + std::to_string(n_null));
    }

    PrecodeSolution solution;
    solution.full_x.assign(params.vector_size, ComplexSample{});
    const Eigen::VectorXcd modulated_free = sys.modulated_info(info);
    for (std::size_t j = 0; j < sys.free_positions.size(); ++j) {
        solution.full_x[sys.free_positions[j]] = info.at(sys.free_positions[j]);
    }

    if (n_null > 0) {
        const Eigen::VectorXcd b = sys.rhs_basis.cols() > 0
                                       ? Eigen::VectorXcd(sys.rhs_basis * modulated_free)
                                       : Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n_null));

        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
            sys.constraint, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sigma = svd.singularValues();
        const double sigma_max = sigma(0);
        const double sigma_min = sigma(sigma.size() - 1);
        solution.condition_estimate =
            sigma_min > 0.0 ? sigma_max / sigma_min
                            : std::numeric_limits<double>::infinity();
        if (!(solution.condition_estimate <= kSingularConditionLimit)) {
            throw SingularError(
                "precode: nulling system for k=" + std::to_string(spec.k) +
                    " is singular or numerically rank deficient (condition estimate " +
                    std::to_string(solution.condition_estimate) + ")",
                solution.condition_estimate);
        }

        Eigen::VectorXcd solved;
        if (mode == SolveMode::exact) {
            solved = sys.constraint.partialPivLu().solve(b);
        } else {
            // Minimum-norm least squares: V * diag(1/sigma) * U^H * b.
            solved = svd.matrixV() *
                     (svd.matrixU().adjoint() * b).cwiseQuotient(sigma.cast<ComplexSample>());
            solution.used_min_norm = true;
        }

        const std::size_t total = params.total();
        for (std::size_t j = 0; j < n_precode; ++j) {
            const std::size_t n = spec.precode_positions[j];
            // Demodulate W_{MN}^{nk} back out of the solved entry.
            solution.full_x[n] = solved(static_cast<Eigen::Index>(j)) *
                                 detail::unit_root((n * spec.k) % total, total, +1);
        }
    } else {
        solution.used_min_norm = false;
        // No constraints: precoded entries, if any, carry zero energy.
    }

    const auto realized = spectrum_map(solution.full_x, spec.k, params);
    solution.residual = 0.0;
    for (std::size_t m : spec.null_positions) {
        solution.residual = std::max(solution.residual, std::abs(realized[m]));
    }
    const auto free_spectrum = detail::complement(spec.null_positions, params.vector_size);
    solution.realized_y_free.reserve(free_spectrum.size());
    for (std::size_t m : free_spectrum) solution.realized_y_free.push_back(realized[m]);
    return solution;
}

/// Applies precode independently to every vector named by a spec; vectors
/// without a spec pass through untouched. Entries of the input grid at
/// precode positions are placeholders and get overwritten.
inline SymbolGrid precode_grid(const SymbolGrid& grid, const std::vector<NullSpec>& specs,
                               SolveMode mode = SolveMode::exact) {
    grid.validate("precode_grid");
    std::vector<bool> seen(grid.params.ifft_size, false);
    for (const auto& spec : specs) {
        spec.validate(grid.params);
        if (seen[spec.k]) {
            throw SpecError("precode_grid: more than one spec for k=" +
                            std::to_string(spec.k));
        }
        seen[spec.k] = true;
    }

    SymbolGrid out = grid;
    for (const auto& spec : specs) {
        std::map<std::size_t, ComplexSample> info;
        for (std::size_t n : detail::complement(spec.precode_positions,
                                                grid.params.vector_size)) {
            info.emplace(n, grid.vectors[spec.k][n]);
        }
        const PrecodeSolution solution = precode(info, spec, grid.params, mode);
        out.vectors[spec.k] = solution.full_x;
    }
    return out;
}

/// End-to-end null check: computes the spectrum of the frame and reports
/// the largest magnitude over the listed flat bins.
struct NullReport {
    double max_magnitude = 0.0;
    double tol = 0.0;
    bool pass = false;
};

inline NullReport verify_nulls(const SpectrumFrame& s,
                               const std::vector<std::size_t>& flat_indices, double tol) {
    NullReport report;
    report.tol = tol;
    for (std::size_t index : flat_indices) {
        if (index >= s.bins.size()) {
            throw IndexError("verify_nulls: flat index " + std::to_string(index) +
                             " out of range [0," + std::to_string(s.bins.size()) + ")");
        }
        report.max_magnitude = std::max(report.max_magnitude, std::abs(s.bins[index]));
    }
    report.pass = report.max_magnitude <= tol;
    return report;
}

inline NullReport verify_nulls(const TimeFrame& frame,
                               const std::vector<std::size_t>& flat_indices, double tol) {
    return verify_nulls(spectrum(frame), flat_indices, tol);
}

} // namespace vofdm
