#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include <vofdm/core.hpp>
#include <vofdm/errors.hpp>
#include <vofdm/precode.hpp>

#include "oracles.hpp"

using vofdm::ComplexSample;
using vofdm::FrameParams;
using vofdm::NullSpec;
using vofdm::SolveMode;
using vofdm::SymbolGrid;

namespace {

std::map<std::size_t, ComplexSample> info_at(const std::vector<std::size_t>& positions,
                                             std::uint64_t seed) {
    const auto values = oracles::random_vector(positions.size(), seed);
    std::map<std::size_t, ComplexSample> info;
    for (std::size_t i = 0; i < positions.size(); ++i) info[positions[i]] = values[i];
    return info;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& set, std::size_t size) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t v : set) {
        for (; next < v; ++next) out.push_back(next);
        next = v + 1;
    }
    for (; next < size; ++next) out.push_back(next);
    return out;
}

double solved_energy(const vofdm::PrecodeSolution& solution,
                     const std::vector<std::size_t>& precode_positions) {
    double acc = 0.0;
    for (std::size_t n : precode_positions) acc += std::norm(solution.full_x[n]);
    return acc;
}

} // namespace

TEST_CASE("trailing factory names the last positions", "[precode]") {
    const NullSpec spec = NullSpec::trailing(5, 2, 8);
    REQUIRE(spec.k == 5);
    REQUIRE(spec.null_positions == std::vector<std::size_t>{6, 7});
    REQUIRE(spec.precode_positions == std::vector<std::size_t>{6, 7});
}

TEST_CASE("spec validation rejects malformed sets", "[precode]") {
    const FrameParams params(8, 64);

    NullSpec unsorted{1, {7, 6}, {6, 7}};
    REQUIRE_THROWS_AS(unsorted.validate(params), vofdm::SpecError);

    NullSpec out_of_range{1, {6, 8}, {6, 7}};
    REQUIRE_THROWS_AS(out_of_range.validate(params), vofdm::IndexError);

    NullSpec bad_k{64, {6, 7}, {6, 7}};
    REQUIRE_THROWS_AS(bad_k.validate(params), vofdm::IndexError);

    NullSpec infeasible{1, {5, 6, 7}, {6, 7}};
    REQUIRE_THROWS_AS(infeasible.validate(params), vofdm::SpecError);

    NullSpec duplicate{1, {6, 6}, {6, 7}};
    REQUIRE_THROWS_AS(duplicate.validate(params), vofdm::SpecError);

    NullSpec fine{1, {6, 7}, {4, 5, 6, 7}};
    REQUIRE_NOTHROW(fine.validate(params));
}

TEST_CASE("constraint matrix holds the selected transform entries", "[precode]") {
    const FrameParams params(8, 64);
    const NullSpec spec{3, {6, 7}, {4, 5}};
    const auto sys = vofdm::build_system(spec, params);

    REQUIRE(sys.constraint.rows() == 2);
    REQUIRE(sys.constraint.cols() == 2);
    REQUIRE(sys.free_positions == complement_of(spec.precode_positions, 8));

    const double scale = 1.0 / std::sqrt(8.0);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const double angle = -2.0 * std::numbers::pi *
                                 static_cast<double>(spec.null_positions[i] *
                                                     spec.precode_positions[j]) /
                                 8.0;
            const ComplexSample want = scale * std::polar(1.0, angle);
            REQUIRE(std::abs(sys.constraint(static_cast<Eigen::Index>(i),
                                            static_cast<Eigen::Index>(j)) -
                             want) <= 1e-14);
        }
    }
}

TEST_CASE("exact solve zeroes the requested spectrum entries", "[precode]") {
    const FrameParams params(8, 64);
    for (std::size_t k : {0u, 1u, 6u, 31u, 32u, 63u}) {
        const NullSpec spec = NullSpec::trailing(k, 2, params.vector_size);
        const auto info = info_at(complement_of(spec.precode_positions, 8), 70 + k);
        const auto solution = vofdm::precode(info, spec, params, SolveMode::exact);

        INFO("k=" << k);
        REQUIRE_FALSE(solution.used_min_norm);
        REQUIRE(solution.residual <= 1e-12);
        REQUIRE(solution.condition_estimate >= 1.0);
        REQUIRE(solution.condition_estimate < 100.0);

        // info symbols pass through untouched
        for (const auto& [n, value] : info) {
            REQUIRE(solution.full_x[n] == value);
        }

        // independent recomputation of the nulled entries
        const auto y = vofdm::spectrum_map(solution.full_x, k, params);
        for (std::size_t z : spec.null_positions) {
            REQUIRE(std::abs(y[z]) <= 1e-12);
        }
        REQUIRE(solution.realized_y_free.size() == 8 - spec.null_positions.size());
    }
}

TEST_CASE("solved vectors null the full transform chain", "[precode]") {
    const FrameParams params(8, 64);
    std::vector<NullSpec> specs;
    for (std::size_t k = 32; k < 64; ++k) {
        specs.push_back(NullSpec::trailing(k, 1, params.vector_size));
    }

    SymbolGrid grid = oracles::random_grid(params, 404);
    for (const auto& spec : specs) {
        for (std::size_t n : spec.precode_positions) grid.vectors[spec.k][n] = {0.0, 0.0};
    }
    const SymbolGrid solved = vofdm::precode_grid(grid, specs, SolveMode::exact);

    const auto s = vofdm::spectrum(vofdm::modulate(solved));
    std::vector<std::size_t> null_bins;
    for (std::size_t k = 32; k < 64; ++k) null_bins.push_back(params.stride_index(7, k));
    const auto report = vofdm::verify_nulls(s, null_bins, 1e-10);
    REQUIRE(report.pass);

    // untouched subcarriers keep their symbols bit for bit
    for (std::size_t k = 0; k < 32; ++k) {
        REQUIRE(solved.vectors[k] == grid.vectors[k]);
    }
}

TEST_CASE("exact mode needs a square system", "[precode]") {
    const FrameParams params(8, 64);
    const NullSpec wide{1, {6, 7}, {4, 5, 6, 7}};
    const auto info = info_at(complement_of(wide.precode_positions, 8), 9);
    REQUIRE_THROWS_AS(vofdm::precode(info, wide, params, SolveMode::exact), vofdm::SpecError);
}

TEST_CASE("least-squares mode handles wide systems", "[precode]") {
    const FrameParams params(8, 64);
    const NullSpec wide{33, {6, 7}, {4, 5, 6, 7}};
    const auto info = info_at(complement_of(wide.precode_positions, 8), 10);
    const auto solution = vofdm::precode(info, wide, params, SolveMode::min_norm);

    REQUIRE(solution.used_min_norm);
    REQUIRE(solution.residual <= 1e-12);

    const auto y = vofdm::spectrum_map(solution.full_x, wide.k, params);
    REQUIRE(std::abs(y[6]) <= 1e-12);
    REQUIRE(std::abs(y[7]) <= 1e-12);
}

TEST_CASE("least-squares equals exact on square systems", "[precode]") {
    const FrameParams params(8, 64);
    const NullSpec spec = NullSpec::trailing(12, 2, params.vector_size);
    const auto info = info_at(complement_of(spec.precode_positions, 8), 11);

    const auto exact = vofdm::precode(info, spec, params, SolveMode::exact);
    const auto least = vofdm::precode(info, spec, params, SolveMode::min_norm);
    REQUIRE(oracles::max_abs_diff(exact.full_x, least.full_x) <= 1e-10);
}

TEST_CASE("degenerate position sets raise the singular error", "[precode]") {
    const FrameParams params(4, 4);
    const NullSpec spec{1, {0, 2}, {0, 2}};
    const auto info = info_at(complement_of(spec.precode_positions, 4), 12);

    try {
        vofdm::precode(info, spec, params, SolveMode::exact);
        FAIL("expected SingularError");
    } catch (const vofdm::SingularError& e) {
        REQUIRE(e.condition_estimate > vofdm::kSingularConditionLimit);
    }

    REQUIRE_THROWS_AS(vofdm::precode(info, spec, params, SolveMode::min_norm),
                      vofdm::SingularError);
}

TEST_CASE("redundancy never raises the total vector energy", "[precode]") {
    // Adding precoded positions while keeping the same nulls can only lower
    // the energy of the whole symbol vector: the exact solution restricted
    // to the wider set is feasible for the least-squares problem.
    const FrameParams params(8, 64);
    const NullSpec narrow = NullSpec::trailing(0, 2, 8); // P = {6,7}
    const NullSpec wide{0, {6, 7}, {4, 5, 6, 7}};

    for (std::uint64_t rep = 0; rep < 50; ++rep) {
        const std::size_t k = rep % params.ifft_size;
        NullSpec narrow_k = narrow;
        narrow_k.k = k;
        NullSpec wide_k = wide;
        wide_k.k = k;

        const auto shared = oracles::random_vector(4, 600 + rep); // positions 0..3
        const auto extra = oracles::random_vector(2, 700 + rep);  // positions 4,5 (exact only)

        std::map<std::size_t, ComplexSample> info_exact;
        std::map<std::size_t, ComplexSample> info_wide;
        for (std::size_t n = 0; n < 4; ++n) {
            info_exact[n] = shared[n];
            info_wide[n] = shared[n];
        }
        info_exact[4] = extra[0];
        info_exact[5] = extra[1];

        const auto exact = vofdm::precode(info_exact, narrow_k, params, SolveMode::exact);
        const auto least = vofdm::precode(info_wide, wide_k, params, SolveMode::min_norm);

        INFO("k=" << k << " rep=" << rep);
        REQUIRE(oracles::energy(least.full_x) <=
                oracles::energy(exact.full_x) * (1.0 + 1e-12));
    }
}

TEST_CASE("grid precoding rejects conflicting or overlapping specs", "[precode]") {
    const FrameParams params(8, 64);
    const SymbolGrid grid = oracles::random_grid(params, 21);
    const NullSpec a = NullSpec::trailing(3, 2, 8);
    REQUIRE_THROWS_AS(vofdm::precode_grid(grid, {a, a}, SolveMode::exact), vofdm::SpecError);
}

TEST_CASE("solved energy comparison helper sanity", "[precode]") {
    const FrameParams params(8, 64);
    const NullSpec spec = NullSpec::trailing(32, 2, 8);
    const auto info = info_at(complement_of(spec.precode_positions, 8), 13);
    const auto solution = vofdm::precode(info, spec, params, SolveMode::exact);
    const double tail = solved_energy(solution, spec.precode_positions);
    REQUIRE(tail >= 0.0);
    REQUIRE(std::isfinite(tail));
}
