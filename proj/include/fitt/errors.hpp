#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fitt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different rings, dimensions disagree, etc.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the 32-bit signed range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}

  std::size_t position() const { return position_; }
  /// The description without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace fitt
