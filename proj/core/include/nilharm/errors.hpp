#pragma once

#include <stdexcept>
#include <string>

namespace nilharm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element, polynomial or matrix does not have the shape its schema requires.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid user input: configs, measures, parse failures, bad arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity the library relies on was observed to fail.
/// Seeing one of these means a bug or an invalid schema/measure upstream.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Exact interpolation produced a polynomial above the claimed degree bound.
class InterpolationError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// A linear system that must be solvable was reported inconsistent.
class InconsistencyError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace nilharm
