#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <vector>

#include <vofdm/dft.hpp>
#include <vofdm/errors.hpp>

#include "oracles.hpp"

using vofdm::ComplexSample;
using vofdm::Direction;
using vofdm::unitary_dft;

namespace {
const std::vector<std::size_t> kSizes = {1,  2,  3,  4,  5,  6,  7,  8,  9, 12,
                                         15, 16, 20, 24, 30, 32, 60, 64, 97};
} // namespace

TEST_CASE("forward transform matches direct summation", "[dft]") {
    for (std::size_t size : kSizes) {
        const auto input = oracles::random_vector(size, 1000 + size);
        const auto got = unitary_dft(input, Direction::forward);
        const auto want = oracles::brute_dft(input, -1);
        INFO("size " << size);
        REQUIRE(oracles::max_abs_diff(got, want) <= 1e-12);
    }
}

TEST_CASE("inverse transform matches direct summation", "[dft]") {
    for (std::size_t size : kSizes) {
        const auto input = oracles::random_vector(size, 2000 + size);
        const auto got = unitary_dft(input, Direction::inverse);
        const auto want = oracles::brute_dft(input, +1);
        INFO("size " << size);
        REQUIRE(oracles::max_abs_diff(got, want) <= 1e-12);
    }
}

TEST_CASE("inverse undoes forward", "[dft]") {
    for (std::size_t size : kSizes) {
        const auto input = oracles::random_vector(size, 3000 + size);
        const auto round = unitary_dft(unitary_dft(input, Direction::forward), Direction::inverse);
        INFO("size " << size);
        REQUIRE(oracles::max_abs_diff(round, input) <= 1e-12);
    }
}

TEST_CASE("transform preserves energy", "[dft]") {
    for (std::size_t size : kSizes) {
        const auto input = oracles::random_vector(size, 4000 + size);
        const auto out = unitary_dft(input, Direction::forward);
        const double in_energy = oracles::energy(input);
        const double out_energy = oracles::energy(out);
        INFO("size " << size);
        REQUIRE(std::abs(in_energy - out_energy) <= 1e-12 * in_energy);
    }
}

TEST_CASE("impulse spreads to flat magnitude", "[dft]") {
    const std::size_t size = 12;
    std::vector<ComplexSample> impulse(size, ComplexSample{0.0, 0.0});
    impulse[0] = {1.0, 0.0};
    const auto out = unitary_dft(impulse, Direction::forward);
    const double expected = 1.0 / std::sqrt(static_cast<double>(size));
    for (const auto& bin : out) {
        REQUIRE(std::abs(std::abs(bin) - expected) <= 1e-14);
    }
}

TEST_CASE("transform is linear", "[dft]") {
    const std::size_t size = 24;
    const auto a = oracles::random_vector(size, 51);
    const auto b = oracles::random_vector(size, 52);
    const ComplexSample alpha{0.7, -1.3};
    std::vector<ComplexSample> mixed(size);
    for (std::size_t i = 0; i < size; ++i) mixed[i] = alpha * a[i] + b[i];

    const auto lhs = unitary_dft(mixed, Direction::forward);
    const auto fa = unitary_dft(a, Direction::forward);
    const auto fb = unitary_dft(b, Direction::forward);
    std::vector<ComplexSample> rhs(size);
    for (std::size_t i = 0; i < size; ++i) rhs[i] = alpha * fa[i] + fb[i];

    REQUIRE(oracles::max_abs_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("length one is identity", "[dft]") {
    const std::vector<ComplexSample> input = {{2.5, -0.5}};
    const auto fwd = unitary_dft(input, Direction::forward);
    REQUIRE(std::abs(fwd[0] - input[0]) <= 1e-15);
}

TEST_CASE("empty input is rejected", "[dft]") {
    const std::vector<ComplexSample> empty;
    REQUIRE_THROWS_AS(unitary_dft(empty, Direction::forward), vofdm::SizeError);
}
