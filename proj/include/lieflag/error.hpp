#pragma once

#include <stdexcept>
#include <string>

namespace lieflag {

/// Input rejected before any computation: bad Cartan datum, bad index, bad parabolic set.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element lies outside the domain an operation requires
/// (e.g. a factorization asked of a non-minimal representative).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lieflag
