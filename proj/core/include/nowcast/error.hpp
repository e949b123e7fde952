#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nowcast {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix dimensions disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration detected before any work starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Covariance or generalized least-squares system could not be factorized.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based, 0 when the whole file is at fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dataset-level invariant violated (duplicate keys, broken joins, ...).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A referenced key is missing from the table it joins against.
class JoinError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

/// A signal column cannot be standardized.
class NormalizationError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

/// Cross-validation failed in a specific fold.
class EvaluationError : public Error {
 public:
  EvaluationError(std::size_t fold, const std::string& what);

  std::size_t fold() const noexcept { return fold_; }

 private:
  std::size_t fold_;
};

}  // namespace nowcast
