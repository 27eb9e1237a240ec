#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tcone {

// Base for every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry extra context.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Operation is undefined for the zero polynomial (degree, leading form, ...).
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(std::move(message)),
        line_(line),
        column_(column) {}

  const std::string& bare_message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t col) {
    return std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Floating evaluation produced an infinite or NaN value.
class NumericOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace tcone
