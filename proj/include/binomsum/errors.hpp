#pragma once

#include <stdexcept>
#include <string>

namespace binomsum {

/// Parameters outside the domain of an operation or identity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Division by zero, a vanishing denominator binomial, or a Gamma pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A non-terminating series evaluated outside its disc of convergence.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypergeometric series with a lower parameter that is a nonpositive
/// integer not shielded by earlier termination.
class UndefinedSeriesError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual input (rationals, ranges, lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace binomsum
