#pragma once

#include <stdexcept>
#include <string>

namespace spherevol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is malformed or violates a documented precondition.
/// The CLI maps this family to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Wrong shape: non-square matrix, rank-deficient vertex set, ...
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The input is valid but the computation cannot be carried out numerically.
/// The CLI maps this family to exit code 2.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Configuration outside what the algorithms support (origin not interior,
/// polynomial degree above four, Gale codimension above two, ...).
class UnsupportedError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Symmetric matrix with an eigenvalue below the negative rank tolerance.
class NotGramMatrixError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace spherevol
