#pragma once

#include <stdexcept>
#include <string>

namespace graded {

/// Input lies outside an operation's domain (bad value, mismatched universes,
/// malformed file, unbound variable, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation is not defined for the given variant.
class UnsupportedVariant : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace graded
