#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Domain errors: the input is well formed but outside what an operation
// accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

class MixedFieldsError : public DomainError {
 public:
  MixedFieldsError(long d1, long d2)
      : DomainError("values live in different quadratic fields: sqrt(" + std::to_string(d1) +
                    ") vs sqrt(" + std::to_string(d2) + ")") {}
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

class OutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

class AlphabetViolation : public DomainError {
 public:
  AlphabetViolation(std::size_t position, unsigned long digit, unsigned long max)
      : DomainError("digit " + std::to_string(digit) + " at position " + std::to_string(position) +
                    " exceeds alphabet maximum " + std::to_string(max)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidTolerance : public DomainError {
 public:
  InvalidTolerance() : DomainError("tolerance must be positive") {}
};

class UnsupportedBase : public DomainError {
 public:
  using DomainError::DomainError;
};

class ShapeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// Raised when a bounded search or refinement could not decide. Distinct
// from DomainError: a larger budget may succeed.
class Undecided : public Error {
 public:
  using Error::Error;
};

class NeedsMorePrecision : public Undecided {
 public:
  explicit NeedsMorePrecision(const std::string& what)
      : Undecided("needs more precision: " + what) {}
};

class PeriodNotFound : public Undecided {
 public:
  PeriodNotFound(std::size_t max_steps, std::size_t shift)
      : Undecided("no period found within " + std::to_string(max_steps) + " steps (shift " +
                  std::to_string(shift) + ")"),
        max_steps_(max_steps),
        shift_(shift) {}
  std::size_t max_steps() const { return max_steps_; }
  std::size_t shift() const { return shift_; }

 private:
  std::size_t max_steps_;
  std::size_t shift_;
};

}  // namespace cantor
