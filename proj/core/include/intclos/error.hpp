#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intclos {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different rings, or vector/matrix shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested dimension is outside what the polyhedral engine handles (n <= 3).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// A quotient that was required to have finite (local) length does not.
class InfiniteColength : public Error {
 public:
  using Error::Error;
};

/// Truncated colengths kept growing up to the configured cap.
class NoStabilization : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis needed by an algorithm could not be certified.
class NotCertified : public Error {
 public:
  using Error::Error;
};

}  // namespace intclos
