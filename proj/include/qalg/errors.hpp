#ifndef QALG_ERRORS_HPP
#define QALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qalg {

/// Base class for all domain errors raised by the library.
class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different rings / have different variable counts.
class DimensionMismatch : public AlgebraError {
public:
    explicit DimensionMismatch(const std::string& what) : AlgebraError(what) {}
};

/// Leading term requested of the zero polynomial.
class UndefinedLeadingTerm : public AlgebraError {
public:
    explicit UndefinedLeadingTerm(const std::string& what) : AlgebraError(what) {}
};

/// Division by zero, a zero divisor set member, or a zero ideal divisor.
class InvalidDivisor : public AlgebraError {
public:
    explicit InvalidDivisor(const std::string& what) : AlgebraError(what) {}
};

/// Operation does not support the ring at hand (e.g. Laurent exponents).
class UnsupportedRing : public AlgebraError {
public:
    explicit UnsupportedRing(const std::string& what) : AlgebraError(what) {}
};

/// Lattice rank or instance size beyond the exact-enumeration bounds.
class UnsupportedSize : public AlgebraError {
public:
    explicit UnsupportedSize(const std::string& what) : AlgebraError(what) {}
};

/// Pair arguments that must be distinct were equal, or out of range.
class InvalidPair : public AlgebraError {
public:
    explicit InvalidPair(const std::string& what) : AlgebraError(what) {}
};

/// Bad estimator configuration (delta <= 0, inverted thresholds, ...).
class InvalidConfig : public AlgebraError {
public:
    explicit InvalidConfig(const std::string& what) : AlgebraError(what) {}
};

/// An internal invariant failed; indicates a library bug, not a user error.
class InternalError : public AlgebraError {
public:
    explicit InternalError(const std::string& what) : AlgebraError(what) {}
};

/// Syntax error in the batch language, with 1-based location.
class ParseError : public AlgebraError {
public:
    ParseError(const std::string& what, int line, int column)
        : AlgebraError(what + " at line " + std::to_string(line) + ", column " +
                       std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace qalg

#endif
