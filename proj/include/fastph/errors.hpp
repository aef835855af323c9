#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fastph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of zero in a prime field") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotTriangular : public Error {
 public:
  using Error::Error;
};

/// Raised when a reduction detects a state its correctness argument rules out.
/// Seeing one means a bug in this library, never bad input.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Base for problems found while reading or validating a filtration.
/// `line()` is the 1-based source line, or 0 when not tied to a line.
class FiltrationError : public Error {
 public:
  FiltrationError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public FiltrationError {
 public:
  using FiltrationError::FiltrationError;
};

class DuplicateSimplex : public FiltrationError {
 public:
  using FiltrationError::FiltrationError;
};

class MissingFace : public FiltrationError {
 public:
  using FiltrationError::FiltrationError;
};

class InvalidLevels : public FiltrationError {
 public:
  using FiltrationError::FiltrationError;
};

}  // namespace fastph
