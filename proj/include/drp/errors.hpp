#pragma once

#include <stdexcept>
#include <string>

namespace drp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs violate an operation's precondition (bad sizes, bad names, bad ranges).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Matrix or sequence shapes do not conform.
class DimensionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A linear system or scalar factor that must be invertible is not.
class SingularError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration text. Carries the 1-based line number (0 when not line-specific).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace drp
