#pragma once

#include <stdexcept>
#include <string>

namespace qdiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shape, non-Hermitian, non-finite entries.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A parameter lies outside the domain of the requested quantity.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// supp(A) is not contained in supp(B) where the quantity requires it.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// Recovery maps and modular operators need positive definite references.
class IllPosedError : public Error {
 public:
  using Error::Error;
};

/// An intermediate result violated an internal consistency check
/// (e.g. a trace that should be real carried a large imaginary part).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdiv
