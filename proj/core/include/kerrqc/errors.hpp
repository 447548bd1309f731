#pragma once

#include <stdexcept>
#include <string>

namespace kerrqc {

/// Argument outside the mathematical domain of an operation (negative
/// Bessel argument, pole of the Poincare chart, non-positive width, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fock cutoff too small for the Poisson tail bound.
class CutoffError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested Gauss-Hermite order exceeds the node table capacity.
class QuadratureOrderError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Iso-level not strictly inside the sampled value range.
class LevelOutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two grids that should share geometry do not.
class CongruenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent bookkeeping produced a non-finite value. Signals a bug, not bad input.
class OverflowGuardError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kerrqc
