#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperring {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Table shape problems: ragged rows, indices out of range, empty carrier.
class MalformedTable : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class NotMultiplicative : public Error {
public:
    using Error::Error;
};

class UnsupportedParameter : public Error {
public:
    using Error::Error;
};

class ContainmentViolation : public Error {
public:
    using Error::Error;
};

class EmptyRealSpectrum : public Error {
public:
    using Error::Error;
};

class PreorderNotPreserved : public Error {
public:
    using Error::Error;
};

class NotHyperring : public Error {
public:
    using Error::Error;
};

class NotVNH : public Error {
public:
    using Error::Error;
};

class ImproperPreorder : public Error {
public:
    using Error::Error;
};

class CodomainNotGvNH : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Raised when a computed structure contradicts a result that should hold
/// for every multiring. Carries the instance data that exposed it.
class TheoremViolation : public Error {
public:
    TheoremViolation(std::string claim, std::vector<std::string> witness = {})
        : Error(claim), claim_(std::move(claim)), witness_(std::move(witness)) {}
    auto claim() const -> const std::string& { return claim_; }
    auto witness() const -> const std::vector<std::string>& { return witness_; }

private:
    std::string claim_;
    std::vector<std::string> witness_;
};

class NonUniqueComplement : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    auto line() const -> std::size_t { return line_; }
    auto column() const -> std::size_t { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Throws TheoremViolation unless `cond` holds.
inline void ensure(bool cond, const std::string& claim, std::vector<std::string> witness = {}) {
    if (!cond) throw TheoremViolation(claim, std::move(witness));
}

}  // namespace hyperring
