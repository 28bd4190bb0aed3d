#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blinker {

// Base for every error raised by the library. Callers that only need a
// message can catch this; the CLI and HTTP layer map subclasses to exit
// codes and status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class OutOfBoundsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class AuthorizationError : public Error {
 public:
  using Error::Error;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

}  // namespace blinker
