#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordrep {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run beyond its configured limits.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wordrep
