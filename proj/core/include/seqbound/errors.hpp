#pragma once

#include <stdexcept>
#include <string>

namespace seqbound {

// Invalid argument value or combination (negative xi, order out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Non-finite input to a special function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A physical precondition failed, e.g. a position selection with ~zero probability.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensolver or iteration failure. `diagnostics` carries solver state for reporting.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::string diagnostics = {})
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

// File parse or write failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace seqbound
