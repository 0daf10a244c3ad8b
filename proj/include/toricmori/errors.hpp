#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toricmori {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable files, inconsistent dimensions, invalid fans.
class InputError : public Error {
  public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for the given
/// data (e.g. a divisor that is not Q-Cartier, a base that is not affine).
/// `reason()` is a short machine-readable tag.
class PreconditionError : public Error {
  public:
    PreconditionError(std::string reason, const std::string& message)
        : Error(message), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

  private:
    std::string reason_;
};

/// A theorem-backed invariant failed. Always a bug.
class InvariantBreach : public Error {
  public:
    using Error::Error;
};

}  // namespace toricmori
