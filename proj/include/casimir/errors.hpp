#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation (bad order,
/// non-positive radius, inconsistent dimension/order pair, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The guard scan could not bracket the expected number of roots.
class RootLossError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature or series failed to reach the requested tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An Abel-Plana integrand whose imaginary-axis growth defeats the Bose or
/// Fermi denominator.
class DivergentTailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
