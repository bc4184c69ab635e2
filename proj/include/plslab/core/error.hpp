#pragma once

#include <stdexcept>
#include <string>

namespace plslab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector, partition or index does not match the shape of its instance.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A point matrix violates column alignment or carries a malformed entry.
class InvalidMatrixError : public Error {
public:
    using Error::Error;
};

/// Densest/Sparsest objective evaluated on a cut with an empty side.
class UndefinedObjectiveError : public Error {
public:
    using Error::Error;
};

/// A requested move leaves the feasible solution space.
class InfeasibleMoveError : public Error {
public:
    using Error::Error;
};

/// Instance, path or flag content that fails a precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its solution-count cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

} // namespace plslab
