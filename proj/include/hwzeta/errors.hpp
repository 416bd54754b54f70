#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hwzeta {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class ZeroRoot : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class NonIntegralInvariant : public Error {
public:
    using Error::Error;
};

class NonIntegralCount : public Error {
public:
    using Error::Error;
};

class HypothesisFailed : public Error {
public:
    using Error::Error;
};

class FunctionalEquationViolated : public Error {
public:
    using Error::Error;
};

class SlopeOutOfRange : public Error {
public:
    using Error::Error;
};

class DominoKunnethUnsupported : public Error {
public:
    using Error::Error;
};

class Inconsistent : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

class BaseMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed complex/curve text. Line and column are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed text describing something that cannot exist (p not prime, mixed sections, ...).
class SemanticError : public Error {
public:
    SemanticError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One violated data-model rule, located by slot index or degree.
struct Diagnostic {
    std::string location;
    std::string rule;
    std::string message;

    std::string to_string() const { return location + ": [" + rule + "] " + message; }
    bool operator==(const Diagnostic&) const = default;
};

/// Thrown by operations whose precondition is "validate passes".
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics)
        : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    static std::string summarize(const std::vector<Diagnostic>& ds) {
        std::string s = "invalid complex";
        for (const auto& d : ds) s += "; " + d.to_string();
        return s;
    }

    std::vector<Diagnostic> diagnostics_;
};

}  // namespace hwzeta
