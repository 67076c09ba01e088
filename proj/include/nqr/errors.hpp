#pragma once

#include <stdexcept>
#include <string>

namespace nqr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// A precondition on the inputs was violated.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource"; }
};

/// Parameters outside the supported range (e.g. irrational srg eigenvalues).
class UnsupportedParameters : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "unsupported"; }
};

/// A conclusion guaranteed by the theory failed to hold. Always a bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "theorem-violation"; }
};

}  // namespace nqr
