#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totirr {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `offset()` is a byte offset (graph6) or a 1-based
/// line number (edge lists), depending on `unit()`.
class ParseError : public InputError {
 public:
  enum class Unit { byte, line };

  ParseError(const std::string& what, std::size_t offset, Unit unit)
      : InputError(what + (unit == Unit::byte ? " at byte " : " at line ") +
                   std::to_string(offset)),
        offset_(offset),
        unit_(unit) {}

  std::size_t offset() const noexcept { return offset_; }
  Unit unit() const noexcept { return unit_; }

 private:
  std::size_t offset_;
  Unit unit_;
};

/// An iterative numeric routine failed to converge.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// An internal identity or a proven bound did not hold. Never expected.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// 64-bit integer arithmetic would have wrapped.
class OverflowError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace totirr
