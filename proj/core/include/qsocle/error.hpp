#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsocle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyGenerators : public Error {
public:
    EmptyGenerators() : Error("generator list is empty") {}
};

class InvalidGenerator : public Error {
public:
    explicit InvalidGenerator(std::int64_t g)
        : Error("generator must be a positive integer, got " + std::to_string(g)) {}
};

/// gcd of the generators is not 1, so the complement in N is infinite.
class NotCofinite : public Error {
public:
    explicit NotCofinite(std::int64_t gcd)
        : Error("generators have gcd " + std::to_string(gcd) + ", expected 1") {}
};

class InvalidAperyBase : public Error {
public:
    explicit InvalidAperyBase(std::int64_t m)
        : Error("Apery base " + std::to_string(m) + " is not a positive member of the semigroup") {}
};

class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

class NotInSemigroup : public Error {
public:
    explicit NotInSemigroup(std::int64_t value)
        : Error(std::to_string(value) + " is not in the semigroup"), value_(value) {}
    std::int64_t value() const noexcept { return value_; }

private:
    std::int64_t value_;
};

class ZeroIdealUnsupported : public Error {
public:
    ZeroIdealUnsupported() : Error("the zero ideal is not supported") {}
};

class AmbientMismatch : public Error {
public:
    AmbientMismatch() : Error("ideals live in different semigroup rings") {}
};

class NotASubideal : public Error {
public:
    NotASubideal() : Error("quotient length requested for a non-subideal") {}
};

class NotContainingQ : public Error {
public:
    explicit NotContainingQ(std::int64_t s)
        : Error("ideal does not contain the parameter t^" + std::to_string(s)) {}
};

class InsufficientBound : public Error {
public:
    InsufficientBound(std::int64_t bound, std::int64_t required)
        : Error("oracle bound " + std::to_string(bound) + " is below the required " +
                std::to_string(required)) {}
};

class UnknownStatement : public Error {
public:
    explicit UnknownStatement(const std::string& id) : Error("unknown statement id '" + id + "'") {}
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qsocle
