#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "casimir/energy.hpp"
#include "casimir/specfun.hpp"

namespace casimir::energy {
namespace {

using std::numbers::pi;

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Upper bound on g(nu) |Bose term| for all angular indices from k onwards,
// summed. Each term obeys
//   |g B| <= g (d nu^2 / (pi ab)) e^{-x} (1/x + 1/x^2) / (1 - e^{-x}),  x = xi nu,
// and the ratio of consecutive bounds is itself bounded by a quantity that
// decreases in nu, so the tail is dominated by a geometric series.
double angular_tail_bound(const Geometry& geom, int k) {
  const int dim = geom.dim();
  const double xi = geom.xi();
  const double ab = geom.inner() * geom.outer();
  const auto nu = spectrum::order_for(dim, k);
  const auto next = spectrum::order_for(dim, k + 1);
  const double v = nu.value();
  const double x = xi * v;
  const double g = spectrum::degeneracy(dim, nu);
  const double g_next = spectrum::degeneracy(dim, next);

  const double lead = g * geom.gap() * v * v / (pi * ab) * std::exp(-x) * (1.0 / x + 1.0 / (x * x)) /
                      (-std::expm1(-x));
  const double ratio = (g_next / g) * ((v + 1.0) / v) * ((v + 1.0) / v) * ((x + xi + 1.0) / (x + 1.0)) *
                       std::exp(-xi);
  if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
  return lead / (1.0 - ratio);
}

}  // namespace

std::vector<Rational> nu_degeneracy_polynomial(int dim) {
  if (dim < 3) throw DomainError("degeneracy polynomial: dimension must be >= 3");
  // nu g(nu) = 2 nu^2 prod_{m=1}^{D-3} (nu - (D-2)/2 + m) / (D-2)!
  std::vector<Rational> p{Rational(0), Rational(0), Rational(2)};
  for (int m = 1; m <= dim - 3; ++m) {
    const Rational shift(2 * m - (dim - 2), 2);
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] = next[j + 1] + p[j];
      next[j] = next[j] + p[j] * shift;
    }
    p = std::move(next);
  }
  std::int64_t factorial = 1;
  for (int i = 2; i <= dim - 2; ++i) factorial *= i;
  for (auto& c : p) c = c / Rational(factorial);
  return p;
}

Rational regularized_linear_sum(int dim) {
  const auto p = nu_degeneracy_polynomial(dim);
  const Rational q(dim - 2, 2);
  Rational total(0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    total = total + p[j] * specfun::hurwitz_zeta_neg(static_cast<int>(j), q);
  }
  return total;
}

EnergyResult energy_numeric(const Geometry& geom, const regsum::QuadratureConfig& q,
                            std::optional<int> k_max) {
  q.validate();
  const int dim = geom.dim();
  if (dim < 4) throw DomainError("numeric energy: dimension must be >= 4");
  if (k_max && *k_max < 0) throw DomainError("numeric energy: k_max must be >= 0");
  if (k_max && *k_max > q.k_max_cap) {
    throw DomainError("numeric energy: k_max exceeds the cap of " + std::to_string(q.k_max_cap));
  }

  const double inv_mean = 1.0 / geom.mean_radius();
  const double d = geom.gap();

  EnergyResult r;
  r.method = Method::numeric;
  auto& diag = r.diagnostics;
  diag.linear_part = -0.25 * inv_mean * regularized_linear_sum(dim).to_double();

  Kahan bose;
  double integral_tails = 0.0;
  double angular_tail = std::numeric_limits<double>::infinity();
  const int last = k_max ? *k_max : q.k_max_cap;
  bool converged = false;
  for (int k = 0; k <= last; ++k) {
    const auto nu = spectrum::order_for(dim, k);
    const double g = spectrum::degeneracy(dim, nu);
    const auto term = regsum::bose_term(regsum::RegularizedSummand(nu.value() * inv_mean, d), q);
    const double contribution = g * term.value;
    diag.per_k.push_back(contribution);
    bose.add(contribution);
    diag.quadrature_error += g * term.quadrature_error;
    integral_tails += g * term.tail_bound;
    diag.k_max = k;

    angular_tail = angular_tail_bound(geom, k + 1);
    if (!k_max && angular_tail < q.k_sum_tol * std::abs(bose.sum)) {
      converged = true;
      break;
    }
  }

  diag.truncation_estimate = angular_tail + integral_tails;
  r.total_energy = diag.linear_part + bose.sum;
  r.per_inner_area = r.total_energy / surface_area(dim, geom.inner());

  if (!k_max && !converged) {
    std::ostringstream msg;
    msg << "numeric energy: angular tail bound " << angular_tail << " still above "
        << q.k_sum_tol << " * |partial| = " << q.k_sum_tol * std::abs(bose.sum) << " at the cap k = "
        << q.k_max_cap << " (D = " << dim << ", eta = " << geom.eta() << ")";
    throw ConvergenceError(msg.str(), std::move(r));
  }
  return r;
}

EnergyResult compute_energy(const Geometry& geom, Method method, const regsum::QuadratureConfig& q,
                            std::optional<int> k_max) {
  switch (method) {
    case Method::closed_form:
      return energy_closed_form(geom);
    case Method::numeric:
      return energy_numeric(geom, q, k_max);
    case Method::plate_limit:
      return energy_plate_limit(geom);
  }
  throw DomainError("unknown method");
}

}  // namespace casimir::energy
