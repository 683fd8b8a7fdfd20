#ifndef CDIM_ERRORS_HPP
#define CDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdim {

/// Base class of every recoverable toolkit error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// API misuse: mismatched contexts, out-of-range queries, bad parameters.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Mathematically undefined request (inverse of zero, leading term of 0).
class DomainError : public Error {
public:
    using Error::Error;
};

enum class HypothesisKind {
    InhomogeneousGenerator,
    UnitIdeal,
    HeightEqualsDimension,
    RedundantPrime,
    BaseDimensionMismatch,
    ParameterConstraint,
};

/// Input breaks a hypothesis of the implemented theorems (CLI exit code 1).
class HypothesisError : public Error {
public:
    HypothesisError(HypothesisKind kind, const std::string& what)
        : Error(what), kind_(kind) {}
    HypothesisKind kind() const { return kind_; }

private:
    HypothesisKind kind_;
};

/// Positioned problem-file error, both syntactic and semantic (CLI exit code 2).
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column),
          message_(message) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// A cross-check that can only fail on a bug fired (CLI exit code 3).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace cdim

#endif
