#pragma once

#include <stdexcept>
#include <string>

namespace opinion {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input, unknown names, bad command-line values.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a model invariant (empty subset, non-injective truth map,
/// non-linear voter order, size caps, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An axiom instance whose structural side-conditions do not hold.
class RejectedInstance : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace opinion
