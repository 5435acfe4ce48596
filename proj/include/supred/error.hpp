#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supred {

/// Malformed `.aut` input. Carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An operation was called on inputs that violate its contract
/// (alphabet mismatch, infeasible supervisor, invalid cover, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A second target was given for an existing (state, event) pair.
class NondeterminismError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Exact search refused because the input exceeds the configured state cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t states, std::size_t cap)
        : std::runtime_error("supervisor has " + std::to_string(states) +
                             " states, exact search cap is " + std::to_string(cap)),
          states_(states), cap_(cap) {}

    std::size_t states() const noexcept { return states_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t states_;
    std::size_t cap_;
};

}  // namespace supred
