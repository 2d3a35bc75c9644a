#pragma once

#include <stdexcept>
#include <string>

namespace vofdm {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Container length does not match the declared frame geometry.
struct SizeError : Error {
    using Error::Error;
};

// Vector index or flat bin index out of range.
struct IndexError : Error {
    using Error::Error;
};

// Non-finite sample (NaN/Inf) where a finite value is required.
struct ValueError : Error {
    using Error::Error;
};

// Ill-formed or infeasible null/precode specification, or misuse of a
// solve mode (e.g. exact mode on a rectangular system).
struct SpecError : Error {
    using Error::Error;
};

// The nulling system is singular or numerically rank deficient.
// Carries the condition estimate that tripped the detection.
struct SingularError : Error {
    SingularError(const std::string& what, double cond)
        : Error(what), condition_estimate(cond) {}

    double condition_estimate;
};

// PAPR requested for an all-zero frame.
struct UndefinedPaprError : Error {
    using Error::Error;
};

// Malformed input file; messages carry the file path and line number
// where applicable.
struct ParseError : Error {
    using Error::Error;
};

} // namespace vofdm
