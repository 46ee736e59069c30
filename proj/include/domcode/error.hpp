#pragma once

#include <stdexcept>
#include <string>

namespace domcode {

/// Bad argument to a constructor or operation (out-of-range size, unknown
/// name, code/graph mismatch).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form query outside the range where the formula is stated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested construction exists mathematically but no explicit code is
/// available for it.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domcode
