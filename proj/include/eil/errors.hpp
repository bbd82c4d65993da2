#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eil {

// Violated precondition on a user-supplied parameter (q not prime, t ∤ q-1, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request: inverse of zero, line through p = p, dual of an origin line.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed graph or point-set text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A brute-force scan refused to start because the instance exceeds the desk-scale guard.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eil
