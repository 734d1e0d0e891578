#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lincong {

/// Input that violates an operation's precondition (zero modulus, arity
/// mismatch, a seed that is not a solution, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive scan was refused because the search space exceeds the cap.
class SizingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Seeing one of these means a bug, not bad input.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, duplicate_variable, missing_modulus, zero_modulus };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  /// Byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace lincong
