#pragma once

#include <stdexcept>
#include <string>

namespace rpluq {

/// Caller violated a documented precondition (dimensions, ranges, moduli).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (matrix, permutation or factor files).
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Inverse of zero requested. Pivots are nonzero by construction, so hitting
/// this inside a decomposition means a logic bug upstream.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structural property that must hold for correctly computed factors did not.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rpluq
