#include "casimir/regsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::regsum {
namespace {

using std::numbers::pi;

// exp(2 pi t) overflows a little past this.
constexpr double kMaxImagAxisT = 110.0;

double abel_plana_integral(const AnalyticFunction& f, const TailBound& tail,
                           const QuadratureConfig& q, bool half_integer) {
  q.validate();
  if (!f.imag_axis) throw DomainError("abel_plana: imaginary-axis evaluator is empty");
  if (!(tail.growth_rate >= 0.0) || tail.growth_rate >= 2.0 * pi) {
    std::ostringstream msg;
    msg << "abel_plana: imaginary-axis growth rate " << tail.growth_rate
        << " is not below 2 pi; the contour integral diverges";
    throw DivergentTailError(msg.str());
  }
  const double decay = 2.0 * pi - tail.growth_rate;

  const auto integrand = [&](double t) {
    const std::complex<double> jump = f.imag_axis(t) - f.imag_axis(-t);
    if (half_integer) return jump.imag() / (std::exp(2.0 * pi * t) + 1.0);
    return -jump.imag() / std::expm1(2.0 * pi * t);
  };

  std::vector<double> cuts;
  for (double b : tail.breakpoints) {
    if (b > 0.0 && std::isfinite(b)) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double t_max = q.truncation / decay;
  if (!cuts.empty()) t_max = std::max(t_max, cuts.back() + q.truncation / decay);

  for (; t_max <= kMaxImagAxisT; t_max *= 2.0) {
    double total = 0.0;
    double left = 0.0;
    std::vector<double> edges = cuts;
    edges.push_back(t_max);
    for (double right : edges) {
      if (right <= left) continue;
      if (right > t_max) break;
      const auto piece =
          quadrature::integrate(integrand, left, right, q.abs_tol, q.rel_tol, q.max_intervals);
      if (!piece.converged) {
        std::ostringstream msg;
        msg << "abel_plana: quadrature on [" << left << ", " << right
            << "] stalled with error estimate " << piece.error << " after " << piece.evaluations
            << " evaluations";
        throw NumericError(msg.str());
      }
      total += piece.value;
      left = right;
    }
    const double tail_estimate = std::abs(integrand(t_max)) / decay;
    if (tail_estimate <= std::max(q.abs_tol, q.rel_tol * std::abs(total))) return total;
  }
  throw DivergentTailError("abel_plana: integrand does not decay along the imaginary axis");
}

// Bound on int_Y^inf sqrt(y^2 - 1) / (exp(beta y) - 1) dy.
double bose_tail_bound(double beta, double y_max) {
  const double e = std::exp(-beta * y_max);
  return e * (y_max / beta + 1.0 / (beta * beta)) / (1.0 - e);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature: tolerances must be positive");
  if (!(truncation >= 30.0)) throw DomainError("quadrature: truncation parameter T must be >= 30");
  if (!(k_sum_tol > 0.0)) throw DomainError("quadrature: k-sum tolerance must be positive");
  if (k_max_cap < 1) throw DomainError("quadrature: k_max cap must be >= 1");
  if (max_intervals < 1) throw DomainError("quadrature: max_intervals must be >= 1");
}

RegularizedSummand::RegularizedSummand(double c, double gap) : c_(c), gap_(gap) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("summand: c must be >= 0");
  if (!(gap > 0.0) || !std::isfinite(gap)) throw DomainError("summand: gap must be > 0");
}

RadialSum bose_term(const RegularizedSummand& s, const QuadratureConfig& q) {
  q.validate();
  RadialSum out;
  const double c = s.c();
  const double d = s.gap();
  if (c == 0.0) {
    // lim_{c->0} (d c^2 / pi) int_1^inf sqrt(y^2-1)/(e^{2dcy}-1) dy = pi / (24 d)
    out.value = -pi / (24.0 * d);
    return out;
  }

  const double beta = s.xi_nu();
  const double prefactor = d * c * c / pi;
  // y = cosh u; truncate where beta (cosh u - 1) = T.
  const double y_max = 1.0 + q.truncation / beta;
  const double u_max = std::acosh(y_max);
  const auto integrand = [beta](double u) {
    const double sh = std::sinh(u);
    return sh * sh / std::expm1(beta * std::cosh(u));
  };
  const auto r = quadrature::integrate(integrand, 0.0, u_max, q.abs_tol / prefactor, q.rel_tol,
                                       q.max_intervals);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "reg_radial_sum: quadrature stalled at c = " << c << ", d = " << d
        << " (error estimate " << r.error << ", value " << r.value << ", " << r.evaluations
        << " evaluations)";
    throw NumericError(msg.str());
  }
  out.value = -prefactor * r.value;
  out.quadrature_error = prefactor * r.error;
  out.tail_bound = prefactor * bose_tail_bound(beta, y_max);
  out.u_max = u_max;
  out.evaluations = r.evaluations;
  return out;
}

RadialSum reg_radial_sum_detailed(const RegularizedSummand& s, const QuadratureConfig& q) {
  RadialSum out = bose_term(s, q);
  out.value -= 0.25 * s.c();
  return out;
}

double reg_radial_sum(const RegularizedSummand& s, const QuadratureConfig& q) {
  return reg_radial_sum_detailed(s, q).value;
}

double abel_plana_integer(const AnalyticFunction& f, const TailBound& tail,
                          const QuadratureConfig& q) {
  if (!f.real_axis) throw DomainError("abel_plana: real-axis evaluator is empty");
  return 0.5 * f.real_axis(0.0) + abel_plana_integral(f, tail, q, false);
}

double abel_plana_half(const AnalyticFunction& f, const TailBound& tail,
                       const QuadratureConfig& q) {
  return abel_plana_integral(f, tail, q, true);
}

}  // namespace casimir::regsum
