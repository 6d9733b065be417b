#pragma once

#include <stdexcept>
#include <string>

namespace ncgas {

/// A PhasePoint was passed to an operation that requires it to lie
/// inside the Fermi-constrained domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid parameters or configuration values.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Failure inside a Monte Carlo run.
class EstimatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExhaustedError : public EstimatorError {
public:
    using EstimatorError::EstimatorError;
};

class NonFiniteKernelError : public EstimatorError {
public:
    using EstimatorError::EstimatorError;
};

/// Malformed config document; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ncgas
