#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatstir {

/// Raised when a generator's projected output exceeds the enumeration cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based byte offset (or a 1-based
/// line number for line-oriented formats, see the throwing function).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected, const std::string& message)
        : std::runtime_error(message), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Input is well-formed but outside the domain of the operation
/// (not a Stirling word, not flattened, wrong multiplicity, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Series evaluation could not certify a rounded integer within its limits.
class PrecisionInsufficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cached count disagrees with its re-derivation.
class CoherenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flatstir
