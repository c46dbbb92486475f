#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir::specfun {
namespace {

using std::numbers::pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = 1e-300;
constexpr double kEulerGamma = std::numbers::egamma;

// Branch switch points. Integer orders: power series below kSeriesLimit,
// Hankel base values plus forward recurrence above kHankelLimit when the
// order is at most half the argument, Steed's method otherwise.
// Half-integer J: forward recurrence while n <= x/2, Miller otherwise.
constexpr double kSeriesLimit = 2.0;
constexpr double kHankelLimit = 25.0;
constexpr double kRescale = 1e150;
constexpr int kMaxIterations = 100000;

// ---------------------------------------------------------------------------
// Half-integer orders nu = n + 1/2

// Backward (Miller) recurrence for J_{m+1/2}, normalized by least squares
// against the closed forms of J_{1/2} and J_{3/2}.
double miller_half_integer_j(int n, double x, double j_half, double j_three_halves) {
  const double top = std::max(static_cast<double>(n), x);
  const int start = static_cast<int>(std::ceil(top)) + 20 +
                    static_cast<int>(std::ceil(8.0 * std::cbrt(top + 1.0)));
  double f_next = 0.0;  // f_{m+1}
  double f_cur = 1.0;   // f_m
  double f_n = (start == n) ? f_cur : 0.0;
  double f1 = 0.0;
  for (int m = start; m >= 1; --m) {
    // f_{m-1} = (2 (m + 1/2) / x) f_m - f_{m+1}
    const double f_prev = (2.0 * m + 1.0) / x * f_cur - f_next;
    f_next = f_cur;
    f_cur = f_prev;
    if (m - 1 == n) f_n = f_cur;
    if (m - 1 == 1) f1 = f_cur;
    if (std::abs(f_cur) > kRescale) {
      f_cur /= kRescale;
      f_next /= kRescale;
      f_n /= kRescale;
      f1 /= kRescale;
    }
  }
  const double f0 = f_cur;
  const double norm = std::max(std::abs(f0), std::abs(f1));
  const double g0 = f0 / norm;
  const double g1 = f1 / norm;
  const double scale = (j_half * g0 + j_three_halves * g1) / (g0 * g0 + g1 * g1);
  return (f_n / norm) * scale;
}

BesselJY half_integer_jy(int n, double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double amp = std::sqrt(2.0 / (pi * x));
  const double j_half = amp * s;
  const double j_three_halves = amp * (s / x - c);
  const double y_half = -amp * c;
  const double y_three_halves = -amp * (c / x + s);

  double y = y_half;
  if (n >= 1) {
    double y_prev = y_half;
    y = y_three_halves;
    for (int m = 1; m < n; ++m) {
      const double y_next = (2.0 * m + 1.0) / x * y - y_prev;
      y_prev = y;
      y = y_next;
    }
  }

  double j = j_half;
  if (n >= 1 && n <= x / 2.0) {
    double j_prev = j_half;
    j = j_three_halves;
    for (int m = 1; m < n; ++m) {
      const double j_next = (2.0 * m + 1.0) / x * j - j_prev;
      j_prev = j;
      j = j_next;
    }
  } else if (n >= 1) {
    j = miller_half_integer_j(n, x, j_half, j_three_halves);
  }
  return {j, y};
}

// ---------------------------------------------------------------------------
// Integer orders

// Power series for J_n(x); accurate without cancellation for x < 2.
double series_j(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  const double q = -half * half;
  double sum = term;
  for (int k = 0; k < 200; ++k) {
    term *= q / ((k + 1.0) * (n + k + 1.0));
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

// Y_0 and Y_1 by their logarithmic series, x < 2.
BesselJY series_y01(double x, double j0, double j1) {
  const double half = 0.5 * x;
  const double q = half * half;
  const double log_half = std::log(half);

  // Y_0 = (2/pi)(ln(x/2) + gamma) J_0 + (2/pi) sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2
  double y0_sum = 0.0;
  double harmonic = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    harmonic += 1.0 / k;
    term *= -q / (static_cast<double>(k) * k);
    const double contribution = -harmonic * term;
    y0_sum += contribution;
    if (std::abs(contribution) <= kEps * std::abs(y0_sum)) break;
  }
  const double y0 = (2.0 / pi) * ((log_half + kEulerGamma) * j0 + y0_sum);

  // Y_1 = -2/(pi x) + (2/pi) ln(x/2) J_1
  //       - (1/pi)(x/2) sum_{k>=0} [psi(k+1) + psi(k+2)] (-q)^k / (k! (k+1)!)
  double y1_sum = 0.0;
  double psi_k1 = -kEulerGamma;        // psi(k + 1)
  double psi_k2 = 1.0 - kEulerGamma;   // psi(k + 2)
  term = 1.0;                          // (-q)^k / (k! (k+1)!)
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      term *= -q / (static_cast<double>(k) * (k + 1.0));
      psi_k1 += 1.0 / k;
      psi_k2 += 1.0 / (k + 1.0);
    }
    const double contribution = (psi_k1 + psi_k2) * term;
    y1_sum += contribution;
    if (k > 0 && std::abs(contribution) <= kEps * std::abs(y1_sum)) break;
  }
  const double y1 = -2.0 / (pi * x) + (2.0 / pi) * log_half * j1 - (1.0 / pi) * half * y1_sum;
  return {y0, y1};
}

double forward_recurrence(double c0, double c1, int n, double x) {
  if (n == 0) return c0;
  double prev = c0;
  double cur = c1;
  for (int m = 1; m < n; ++m) {
    const double next = (2.0 * m) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BesselJY integer_series(int n, double x) {
  const double j0 = series_j(0, x);
  const double j1 = series_j(1, x);
  const BesselJY y01 = series_y01(x, j0, j1);
  return {series_j(n, x), forward_recurrence(y01.j, y01.y, n, x)};
}

// Hankel asymptotic expansion for orders 0 and 1, x >= kHankelLimit.
BesselJY hankel_base(int order, double x) {
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > last) break;  // asymptotic series has started to diverge
    last = mag;
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (mag <= 0.1 * kEps) break;
  }
  // chi = x - order*pi/2 - pi/4, expanded so that x itself is never rounded.
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double r = std::numbers::sqrt2 / 2.0;
  double cos_chi = 0.0;
  double sin_chi = 0.0;
  if (order == 0) {
    cos_chi = r * (c + s);
    sin_chi = r * (s - c);
  } else {
    cos_chi = r * (s - c);
    sin_chi = -r * (s + c);
  }
  const double amp = std::sqrt(2.0 / (pi * x));
  return {amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi)};
}

BesselJY integer_hankel(int n, double x) {
  const BesselJY b0 = hankel_base(0, x);
  const BesselJY b1 = hankel_base(1, x);
  return {forward_recurrence(b0.j, b1.j, n, x), forward_recurrence(b0.y, b1.y, n, x)};
}

// Steed's method: CF1 for J'/J at the target order, backward recurrence to a
// low order mu where CF2 converges, CF2 for (J' + iY')/(J + iY), and the
// Wronskian to fix the normalization. Requires x >= kSeriesLimit.
BesselJY steed(double nu, double x) {
  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / pi;

  // CF1
  int isign = 1;
  double h = std::max(nu * xi, kFpMin);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= kMaxIterations; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (i > kMaxIterations) throw NumericError("bessel: CF1 did not converge");

  double rjl = isign * 1e-30;
  double rjpl = h * rjl;
  double rjl1 = rjl;
  double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
    if (std::abs(rjl) > kRescale) {
      rjl /= kRescale;
      rjpl /= kRescale;
      rjl1 /= kRescale;
      rjp1 /= kRescale;
    }
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  // CF2 (Steed's algorithm for the complex continued fraction)
  double a = 0.25 - xmu * xmu;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 2; i <= kMaxIterations; ++i) {
    a += 2 * (i - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
  }
  if (i > kMaxIterations) throw NumericError("bessel: CF2 did not converge");

  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  double ry1 = xmu * xi * rymu - rymup;

  const double scale = rjmu / rjl;
  const double j = rjl1 * scale;
  for (int k = 1; k <= nl; ++k) {
    const double rytemp = (xmu + k) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  return {j, rymu};
}

BesselJY integer_jy(int n, double x) {
  if (x < kSeriesLimit) return integer_series(n, x);
  if (x >= kHankelLimit && n <= x / 2.0) return integer_hankel(n, x);
  return steed(static_cast<double>(n), x);
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

}  // namespace

BesselOrder BesselOrder::from_twice(int twice_nu) {
  if (twice_nu < 0) throw DomainError("BesselOrder: order must be nonnegative");
  return BesselOrder(twice_nu);
}

BesselOrder BesselOrder::from_value(double nu) {
  const double twice = 2.0 * nu;
  if (!(nu >= 0.0) || !std::isfinite(nu) || twice != std::floor(twice) || twice > 1e9) {
    throw DomainError("BesselOrder: order " + std::to_string(nu) +
                      " is not on the half-integer lattice");
  }
  return BesselOrder(static_cast<int>(twice));
}

BesselJY bessel_jy(BesselOrder order, double x) {
  require_positive(x, "bessel_jy");
  if (order.is_integer()) return integer_jy(order.twice() / 2, x);
  return half_integer_jy((order.twice() - 1) / 2, x);
}

double bessel_j(BesselOrder order, double x) {
  if (x == 0.0) return order.twice() == 0 ? 1.0 : 0.0;
  if (x < 0.0 || std::isnan(x)) throw DomainError("bessel_j: negative argument");
  return bessel_jy(order, x).j;
}

double bessel_y(BesselOrder order, double x) {
  require_positive(x, "bessel_y");
  return bessel_jy(order, x).y;
}

}  // namespace casimir::specfun
