#pragma once

#include <stdexcept>
#include <string>

namespace resdil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input failed a structural or range check (bad probability, bad range, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Subsystem dimension list does not match the matrix.
class BadDims : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Operand dimensions disagree (channel vs state, state vs state).
class DimMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownFigure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Something numerical went wrong rather than the input being malformed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A rate denominator vanished (e.g. diluting into a free state).
class Degenerate : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace resdil
