#pragma once

#include <stdexcept>
#include <string>

namespace qgl {

/// Input that violates a documented precondition (bad parameters,
/// malformed expression, invalid datum).  Maps to CLI exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation that cannot be carried out (unsupported variant,
/// size cap exceeded, vanishing denominator).  Maps to CLI exit code 3.
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exact zero scalar.
struct DivisionByZero : ComputationError {
    using ComputationError::ComputationError;
};

}  // namespace qgl
