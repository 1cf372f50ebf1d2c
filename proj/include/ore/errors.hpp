#pragma once

#include <stdexcept>
#include <string>

namespace ore {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the carrier or violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// residual(p, q) requested for q not above p.
class NotComparableError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed input document. `field` names the offending field when known.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message, std::string field = {})
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A configured enumeration or search bound was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace ore
