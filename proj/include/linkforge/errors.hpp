#pragma once

#include <stdexcept>
#include <string>

namespace linkforge {

// Bad arguments to an operation (empty lists, zero denominators, unbounded ranges).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The input describes something that is not a valid link candidate.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NormalizationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonHomogeneousError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Some variable never appears, so the origin cannot be an isolated singularity.
class NonIsolatedError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// d / w_i reduces to u_i = 1 for some weight.
class DegenerateInputError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedConfigurationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotSmaleRealizableError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// An internal consistency check failed: either the input data or a reduction is wrong.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedCurveError : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

} // namespace linkforge
