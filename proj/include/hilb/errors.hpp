#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilb {

/// Malformed user input: bad variable names, unknown variables, inconsistent
/// gradings, unsupported substitutions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a polynomial expression or an ideal file, with the
/// 0-based character offset where it was detected.
class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

class NotHomogeneousError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoHeftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteQuotientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero ideal or unit ideal passed where a zero-dimensional proper ideal is
/// required.
class DegenerateIdealError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace hilb
