#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiring_lab {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient domains (N, Z, Q).
class DomainMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Operands live in rings with different numbers of variables, or an
/// evaluation point / image list has the wrong length.
class ArityMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A value does not belong to the domain it was tagged with
/// (for instance a negative coefficient in N[T]).
class DomainViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// An input lies outside the budget a bounded search was configured with.
class OutOfBudget : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A precondition of an operation does not hold.
class PreconditionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : AlgebraError(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  /// Message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace semiring_lab
