#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace telescope {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pole was hit: a negative exponent met a zero assignment, or a
/// denominator specialized to zero.
class EvalDivisionByZero : public Error {
public:
    using Error::Error;
};

class MissingAssignment : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

/// A denominator factor is the zero polynomial. `index()` carries the
/// telescoping index k when the factor came from a scheme's v(k).
class ZeroDenominatorFactor : public Error {
public:
    explicit ZeroDenominatorFactor(const std::string& what,
                                   std::optional<std::int64_t> index = std::nullopt)
        : Error(what), index_(index) {}

    std::optional<std::int64_t> index() const noexcept { return index_; }

private:
    std::optional<std::int64_t> index_;
};

class UnknownSequence : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace telescope
