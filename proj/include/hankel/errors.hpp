#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

// Division by the zero polynomial, inverse of zero and the like are reported
// with std::domain_error directly.

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation is not supported over the working field
/// (typically a characteristic-p obstruction).
class UnsupportedFieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input file uses a variant of a format that is not handled.
class UnsupportedFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input whose content is out of range (e.g. an edge endpoint).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree by theory did not. Always a bug or a
/// violated field assumption, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hankel
