// Error hierarchy. ValidationError covers malformed inputs (CLI exit 2);
// NumericalError covers invariant violations detected at run time (CLI exit 3).

#pragma once

#include <stdexcept>
#include <string>

namespace szsim {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct NotStochastic : ValidationError {
    using ValidationError::ValidationError;
};
struct NotDistribution : ValidationError {
    using ValidationError::ValidationError;
};
struct IsolatedNode : ValidationError {
    using ValidationError::ValidationError;
};
struct TooSmall : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidNode : ValidationError {
    using ValidationError::ValidationError;
};
struct NotUnitary : ValidationError {
    using ValidationError::ValidationError;
};
struct IncompatibleSupport : ValidationError {
    using ValidationError::ValidationError;
};
struct DimensionLimit : ValidationError {
    using ValidationError::ValidationError;
};
struct TooLarge : ValidationError {
    using ValidationError::ValidationError;
};

struct UnnormalizedState : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace szsim
