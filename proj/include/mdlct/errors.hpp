#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdlct {

/// Base class for all mdlct errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value-domain precondition was violated (item outside the alphabet,
/// empty dataset where a non-empty one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Oracle transport failed (broken pipe, dead child, connection error,
/// non-200 response).
class TransportError : public Error {
 public:
  using Error::Error;
};

/// The oracle answered with something that is not a verdict.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// The oracle query budget is exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdlct
