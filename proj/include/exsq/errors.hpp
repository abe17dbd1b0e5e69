#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace exsq {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (isqrt(-1), gcd of zeros).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Text that does not parse as the expected number, tuple, or record.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Exact division requested where the divisor does not divide.
class NotExact : public Error {
public:
    using Error::Error;
};

/// A parameter value that makes some root vanish or collapses the construction.
/// quantity() names the expression that degenerated.
class DegenerateParameter : public Error {
public:
    DegenerateParameter(std::string quantity, const std::string& detail)
        : Error("degenerate parameter: " + quantity + (detail.empty() ? "" : " (" + detail + ")")),
          quantity_(std::move(quantity)) {}
    const std::string& quantity() const { return quantity_; }

private:
    std::string quantity_;
};

/// Caller broke a precondition (invalid chain solution, bad index).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Method-1 flip schedule ran out before all roots became distinct.
/// multiplicity() describes the classes of roots still equal up to sign.
class DistinctifyFailure : public Error {
public:
    DistinctifyFailure(const std::string& what, std::string multiplicity)
        : Error(what + ": " + multiplicity), multiplicity_(std::move(multiplicity)) {}
    const std::string& multiplicity() const { return multiplicity_; }

private:
    std::string multiplicity_;
};

}  // namespace exsq
