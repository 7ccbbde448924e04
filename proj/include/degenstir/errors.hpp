#pragma once

#include <stdexcept>
#include <string>

namespace degenstir {

/// Division by zero, or inversion of a non-invertible element.
class DivisionByZeroError : public std::domain_error {
public:
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (rational strings, format names, ...).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands live in incompatible structures (series order mismatch, ...).
class MismatchError : public std::invalid_argument {
public:
    explicit MismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A series operation requires a specific constant term (1, or invertible).
class ConstantTermError : public std::domain_error {
public:
    explicit ConstantTermError(const std::string& what) : std::domain_error(what) {}
};

/// The order parameter of the closed-form Bernoulli evaluation hits a pole
/// (alpha in {0, -1, ..., -n}).
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace degenstir
