#pragma once

// Special-function kernel: cylinder Bessel functions on the half-integer
// order lattice, Gamma, Riemann zeta at integer arguments, Bernoulli numbers
// and polynomials, and Hurwitz zeta at non-positive integers.
//
// Everything here is a pure function; no caches, no global state.

#include <vector>

#include "casimir/rational.hpp"

namespace casimir::specfun {

/// Bessel order restricted to {j/2 : j = 0, 1, 2, ...}.
class BesselOrder {
 public:
  /// Order j/2.
  static BesselOrder from_twice(int twice_nu);
  /// Throws DomainError if nu is negative or not a multiple of 1/2.
  static BesselOrder from_value(double nu);

  double value() const { return 0.5 * twice_; }
  int twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }

  friend bool operator==(BesselOrder, BesselOrder) = default;

 private:
  explicit BesselOrder(int twice) : twice_(twice) {}
  int twice_;
};

/// Argument pair (p, q) of the Hurwitz zeta value zeta(-p, q).
class ZetaArg {
 public:
  ZetaArg(int p, double q);
  int p() const { return p_; }
  double q() const { return q_; }

 private:
  int p_;
  double q_;
};

struct BesselJY {
  double j;
  double y;
};

/// J_nu(x). x = 0 gives 1 for nu = 0 and 0 otherwise.
double bessel_j(BesselOrder order, double x);

/// Y_nu(x) (Neumann function N_nu), x > 0.
double bessel_y(BesselOrder order, double x);

/// J_nu(x) and Y_nu(x) from one evaluation, x > 0.
BesselJY bessel_jy(BesselOrder order, double x);

/// Gamma(x) for x > 0. Exact recurrence on the integer and half-integer
/// lattice, std::tgamma elsewhere.
double gamma_fn(double x);

/// Gamma(x) / Gamma(y) where x - y is a nonnegative integer and y > 0,
/// evaluated as the telescoped product y (y+1) ... (x-1).
double gamma_ratio(double x, double y);

/// Riemann zeta(s) for integer s >= 2. Even s uses the Bernoulli-number
/// closed form, odd s the accelerated alternating (eta) series.
double riemann_zeta_int(int s);

/// Riemann zeta(s) for integer s >= 2 through the alternating eta series
/// regardless of parity.
double riemann_zeta_eta_series(int s);

/// Largest index supported by bernoulli_number / bernoulli_poly.
inline constexpr int kMaxBernoulliIndex = 40;

/// B_m with the convention B_1 = -1/2.
Rational bernoulli_number(int m);

/// Coefficients c_0..c_m of B_m(q) = sum_k c_k q^k.
std::vector<Rational> bernoulli_poly_coefficients(int m);

/// B_m(q) with exact coefficients evaluated in floating point.
double bernoulli_poly(int m, double q);

/// B_m(q) at rational q, exactly.
Rational bernoulli_poly(int m, const Rational& q);

/// zeta(-p, q) = -B_{p+1}(q) / (p+1).
double hurwitz_zeta_neg(const ZetaArg& arg);

/// Exact zeta(-p, q) at rational q.
Rational hurwitz_zeta_neg(int p, const Rational& q);

}  // namespace casimir::specfun
