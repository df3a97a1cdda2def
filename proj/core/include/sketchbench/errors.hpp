#pragma once

#include <stdexcept>
#include <string>

namespace sketchbench {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad or inconsistent matrix/vector dimensions (BadDims, DimMismatch, NotPowerOfTwo).
struct DimensionError : Error {
    using Error::Error;
};

/// Numerical rank test failed where full column rank is required.
struct RankDeficientError : Error {
    using Error::Error;
};

/// Invalid distribution parameters (divisibility, integrality, missing scores,
/// probability overflow, all-zero weights, ...).
struct ParamError : Error {
    using Error::Error;
};

/// A spectrum operation received an empty set.
struct EmptySetError : Error {
    using Error::Error;
};

/// File parsing failure; message carries line/column context.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace sketchbench
