#pragma once

#include <stdexcept>

namespace psl {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Strictly positive and strictly negative entries coexist in a vector that
/// was expected to be a (possibly rescaled) probability vector.
struct MixedSignVector : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidProbability : Error {
    using Error::Error;
};

struct InvalidDistribution : Error {
    using Error::Error;
};

struct InvalidGTable : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct ZeroDominantValue : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

/// Requested limit sits on the support-size boundary where no unique
/// dominant eigenvalue exists.
struct BoundaryCase : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Catch-all for violated call contracts that have no dedicated type.
struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace psl
