#pragma once

#include <stdexcept>
#include <string>

namespace hypgraft {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller supplied an inconsistent configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A geometric construction produced an invalid configuration.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sampling would exceed the configured element cap.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested quantity does not exist for this input (e.g. a seam to a cusp).
struct Unsupported : DomainError {
    using DomainError::DomainError;
};

} // namespace hypgraft
