#pragma once

// Regularized summation: the Abel-Plana formulas for integer and
// half-integer lattices, and the per-angular-mode regularized radial sum
//
//   R(c, d) = (1/2) Reg sum_{n>=1} sqrt((n pi / d)^2 + c^2)
//           = -c/4 - (d c^2 / pi) int_1^inf sqrt(y^2 - 1) / (exp(2 d c y) - 1) dy.

#include <complex>
#include <functional>
#include <vector>

namespace casimir::regsum {

/// Tolerances and truncation rules shared by the Bose-factor integrals and
/// the angular-mode sum built on top of them.
struct QuadratureConfig {
  double rel_tol = 1e-13;
  double abs_tol = 1e-16;
  /// Integrals are truncated where the Bose factor has decayed by exp(-T).
  double truncation = 40.0;
  /// Angular sum stops when its rigorous tail bound drops below
  /// k_sum_tol * |partial sum|.
  double k_sum_tol = 1e-14;
  /// Hard cap on the number of angular modes.
  int k_max_cap = 10000;
  int max_intervals = 4000;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// Per-mode input to the regularized radial sum.
class RegularizedSummand {
 public:
  /// c >= 0 (units 1/length), gap > 0.
  RegularizedSummand(double c, double gap);

  double c() const { return c_; }
  double gap() const { return gap_; }
  /// Decay rate of the Bose factor, 2 gap c (the product xi * nu).
  double xi_nu() const { return 2.0 * gap_ * c_; }

 private:
  double c_;
  double gap_;
};

struct RadialSum {
  double value = 0.0;
  /// Quadrature error estimate of the Bose term, in the units of value.
  double quadrature_error = 0.0;
  /// Upper bound of the discarded integral tail, in the units of value.
  double tail_bound = 0.0;
  /// Upper limit of the cosh-substituted integral.
  double u_max = 0.0;
  int evaluations = 0;
};

/// R(c, d) with diagnostics. Throws NumericError if the quadrature misses
/// its tolerance.
RadialSum reg_radial_sum_detailed(const RegularizedSummand& s, const QuadratureConfig& q = {});

double reg_radial_sum(const RegularizedSummand& s, const QuadratureConfig& q = {});

/// The Bose-factor term alone: R(c, d) + c/4.
RadialSum bose_term(const RegularizedSummand& s, const QuadratureConfig& q = {});

/// A function analytic in the right half plane, given by its values on the
/// nonnegative real axis and on the imaginary axis. imag_axis(t) must return
/// f(i t) for real t of either sign; branch choices on the imaginary axis
/// are the caller's responsibility.
struct AnalyticFunction {
  std::function<double(double)> real_axis;
  std::function<std::complex<double>(double)> imag_axis;
};

/// Caller-asserted growth of |f(+-i t)|: at most C exp(growth_rate t).
/// Breakpoints are points t > 0 where f(it) is not smooth (branch points);
/// the quadrature splits there.
struct TailBound {
  double growth_rate = 0.0;
  std::vector<double> breakpoints;
};

/// sum_{n>=0} f(n) - int_0^inf f
///   = f(0)/2 + i int_0^inf [f(it) - f(-it)] / (exp(2 pi t) - 1) dt.
/// Throws DivergentTailError if growth_rate >= 2 pi or the integrand does not
/// decay, NumericError if the quadrature misses its tolerance.
double abel_plana_integer(const AnalyticFunction& f, const TailBound& tail,
                          const QuadratureConfig& q = {});

/// sum_{n>=0} f(n + 1/2) - int_0^inf f
///   = -i int_0^inf [f(it) - f(-it)] / (exp(2 pi t) + 1) dt.
double abel_plana_half(const AnalyticFunction& f, const TailBound& tail,
                       const QuadratureConfig& q = {});

}  // namespace casimir::regsum
