#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero or another undefined field operation.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Caller violated an API contract: shape mismatch, mixed fields, bad argument.
class UsageError : public Error {
public:
    using Error::Error;
};

/// A square matrix that was required to be invertible is singular.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A vectorized linear matrix system has no solution.
class NoSolutionError : public Error {
public:
    using Error::Error;
};

/// Group inverse requested for a matrix of index >= 2.
class NotGroupInvertibleError : public Error {
public:
    using Error::Error;
};

/// Input does not satisfy the hypothesis of a construction (e.g. A^2 != I).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Run configuration cannot serve the request (e.g. missing sqrt(d) extension).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

}  // namespace ranklab
