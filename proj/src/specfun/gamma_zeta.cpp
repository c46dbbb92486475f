#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir::specfun {
namespace {

using std::numbers::pi;

// Above this the lattice products overflow anyway.
constexpr double kLatticeGammaLimit = 171.0;

bool on_half_lattice(double x) { return 2.0 * x == std::floor(2.0 * x); }

// Bernoulli numbers B_0..B_kMaxBernoulliIndex from
// B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k.
std::array<Rational, kMaxBernoulliIndex + 1> make_bernoulli_table() {
  std::array<Rational, kMaxBernoulliIndex + 1> b{};
  b[0] = Rational(1);
  for (int m = 1; m <= kMaxBernoulliIndex; ++m) {
    Rational sum(0);
    Rational::Int binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      if (!b[k].is_zero()) sum += Rational(binom, 1) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -sum / Rational(m + 1);
  }
  return b;
}

const std::array<Rational, kMaxBernoulliIndex + 1>& bernoulli_table() {
  static const auto table = make_bernoulli_table();
  return table;
}

void require_bernoulli_index(int m) {
  if (m < 0 || m > kMaxBernoulliIndex) {
    throw DomainError("Bernoulli index " + std::to_string(m) + " outside [0, " +
                      std::to_string(kMaxBernoulliIndex) + "]");
  }
}

}  // namespace

ZetaArg::ZetaArg(int p, double q) : p_(p), q_(q) {
  if (p < 0) throw DomainError("ZetaArg: p must be a nonnegative integer");
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("ZetaArg: q must be positive");
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_fn: argument must be positive, got " + std::to_string(x));
  }
  if (x >= kLatticeGammaLimit || !on_half_lattice(x)) return std::tgamma(x);
  // Gamma(1) = 1, Gamma(1/2) = sqrt(pi), then Gamma(z+1) = z Gamma(z).
  double z = (x == std::floor(x)) ? 1.0 : 0.5;
  double value = (z == 1.0) ? 1.0 : std::sqrt(pi);
  while (z < x) {
    value *= z;
    z += 1.0;
  }
  return value;
}

double gamma_ratio(double x, double y) {
  const double steps = x - y;
  if (!(y > 0.0) || steps < 0.0 || steps != std::floor(steps)) {
    throw DomainError("gamma_ratio: need y > 0 and x - y a nonnegative integer");
  }
  double product = 1.0;
  for (double z = y; z < x; z += 1.0) product *= z;
  return product;
}

double riemann_zeta_eta_series(int s) {
  if (s < 2) throw DomainError("riemann_zeta: s must be >= 2, got " + std::to_string(s));
  // Borwein's acceleration of eta(s) = sum (-1)^k / (k+1)^s, error below
  // 3 / (3 + sqrt 8)^n.
  constexpr int n = 28;
  std::array<double, n + 1> d{};
  double term = 1.0;  // n (n+i-1)! 4^i / ((n-i)! (2i)!)
  double acc = term;
  d[0] = acc;
  for (int i = 0; i < n; ++i) {
    term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    acc += term;
    d[i + 1] = acc;
  }
  double sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[k] - d[n]) / std::pow(k + 1.0, s);
  }
  const double eta = -sum / d[n];
  return eta / (1.0 - std::ldexp(1.0, 1 - s));
}

double riemann_zeta_int(int s) {
  if (s < 2) throw DomainError("riemann_zeta: s must be >= 2, got " + std::to_string(s));
  if (s % 2 != 0 || s > kMaxBernoulliIndex) return riemann_zeta_eta_series(s);
  // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
  const double b = std::abs(bernoulli_number(s).to_double());
  double value = b / 2.0;
  for (int i = 1; i <= s; ++i) value *= 2.0 * pi / i;
  return value;
}

Rational bernoulli_number(int m) {
  require_bernoulli_index(m);
  return bernoulli_table()[m];
}

std::vector<Rational> bernoulli_poly_coefficients(int m) {
  require_bernoulli_index(m);
  // B_m(q) = sum_k C(m, k) B_{m-k} q^k
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
  Rational::Int binom = 1;
  for (int k = 0; k <= m; ++k) {
    coeffs[k] = Rational(binom, 1) * bernoulli_table()[m - k];
    binom = binom * (m - k) / (k + 1);
  }
  return coeffs;
}

double bernoulli_poly(int m, double q) {
  const auto coeffs = bernoulli_poly_coefficients(m);
  double value = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * q + it->to_double();
  return value;
}

Rational bernoulli_poly(int m, const Rational& q) {
  const auto coeffs = bernoulli_poly_coefficients(m);
  Rational value(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * q + *it;
  return value;
}

double hurwitz_zeta_neg(const ZetaArg& arg) {
  return -bernoulli_poly(arg.p() + 1, arg.q()) / (arg.p() + 1);
}

Rational hurwitz_zeta_neg(int p, const Rational& q) {
  if (p < 0) throw DomainError("hurwitz_zeta_neg: p must be nonnegative");
  if (q <= Rational(0)) throw DomainError("hurwitz_zeta_neg: q must be positive");
  return -bernoulli_poly(p + 1, q) / Rational(p + 1);
}

}  // namespace casimir::specfun
