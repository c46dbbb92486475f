#include "casimir/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::spectrum {
namespace {

using std::numbers::pi;

constexpr double kEps = 2.220446049250313e-16;

bool same_sign(double a, double b) { return (a < 0.0) == (b < 0.0); }

// Bracketed root refinement: Illinois-modified secant steps, with a
// bisection step whenever a secant step fails to halve the bracket.
template <class F>
double refine_root(const F& f, double lo, double hi, double f_lo, double f_hi) {
  bool force_bisect = false;
  int side = 0;  // which end the last secant step replaced
  for (int iter = 0; iter < 300; ++iter) {
    const double width = hi - lo;
    if (width <= 4.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
    double x = 0.5 * (lo + hi);
    if (!force_bisect) {
      const double secant = hi - f_hi * width / (f_hi - f_lo);
      if (secant > lo + 1e-3 * width && secant < hi - 1e-3 * width) x = secant;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (same_sign(fx, f_lo)) {
      lo = x;
      f_lo = fx;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = fx;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    force_bisect = !force_bisect && (hi - lo) > 0.5 * width;
  }
  return std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
}

}  // namespace

Geometry::Geometry(int dim, double inner, double outer) : dim_(dim), inner_(inner), outer_(outer) {
  if (dim < 3) throw DomainError("geometry: dimension must be >= 3, got " + std::to_string(dim));
  if (!std::isfinite(inner) || !std::isfinite(outer) || !(inner > 0.0)) {
    throw DomainError("geometry: radii must be positive and finite");
  }
  if (!(inner < outer)) throw DomainError("geometry: require a < b");
}

Geometry Geometry::from_eta(int dim, double eta, double mean_radius) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("geometry: eta must be positive");
  if (!(mean_radius > 0.0) || !std::isfinite(mean_radius)) {
    throw DomainError("geometry: mean radius must be positive");
  }
  const double inner = 0.5 * mean_radius * (std::sqrt(eta * eta + 4.0) - eta);
  return Geometry(dim, inner, inner + eta * mean_radius);
}

double Geometry::mean_radius() const { return std::sqrt(inner_ * outer_); }

Geometry Geometry::scaled(double sigma) const {
  return Geometry(dim_, sigma * inner_, sigma * outer_);
}

BesselOrder order_for(int dim, int k) {
  if (dim < 3) throw DomainError("order_for: dimension must be >= 3");
  if (k < 0) throw DomainError("order_for: angular index must be nonnegative");
  return BesselOrder::from_twice(2 * k + dim - 2);
}

ModeIndex::ModeIndex(int dim, int k, int n) : k_(k), n_(n), nu_(order_for(dim, k)) {
  if (n < 1) throw DomainError("ModeIndex: radial index must be >= 1");
}

double freq_eq(const Geometry& geom, BesselOrder nu, double omega) {
  if (!(omega > 0.0)) throw DomainError("freq_eq: omega must be positive");
  const auto in = specfun::bessel_jy(nu, omega * geom.inner());
  const auto out = specfun::bessel_jy(nu, omega * geom.outer());
  return out.j * in.y - in.j * out.y;
}

double asymptotic_omega(const Geometry& geom, BesselOrder nu, int n) {
  if (n < 1) throw DomainError("asymptotic_omega: radial index must be >= 1");
  const double radial = n * pi / geom.gap();
  const double v = nu.value();
  return std::sqrt(radial * radial + v * v / (geom.inner() * geom.outer()));
}

double asymptotic_omega(const Geometry& geom, const ModeIndex& mode) {
  return asymptotic_omega(geom, mode.nu(), mode.n());
}

RootBounds root_bounds(const Geometry& geom, BesselOrder nu, int n) {
  if (n < 1) throw DomainError("root_bounds: radial index must be >= 1");
  const double radial = n * pi / geom.gap();
  const double strength = nu.value() * nu.value() - 0.25;
  const double v_inner = strength / (geom.inner() * geom.inner());
  const double v_outer = strength / (geom.outer() * geom.outer());
  const double v_min = std::min(v_inner, v_outer);
  const double v_max = std::max(v_inner, v_outer);
  return {std::sqrt(std::max(0.0, radial * radial + v_min)), std::sqrt(radial * radial + v_max)};
}

std::vector<double> find_roots(const Geometry& geom, BesselOrder nu, int n_max) {
  if (n_max < 1) throw DomainError("find_roots: n_max must be >= 1");
  const double period = pi / geom.gap();
  const double step = 0.45 * period;
  const auto f = [&](double w) { return freq_eq(geom, nu, w); };

  const double seed = std::min(root_bounds(geom, nu, 1).lower, asymptotic_omega(geom, nu, 1));
  const double start = std::max(seed - 0.25 * period, 0.05 * period);
  const double stop = root_bounds(geom, nu, n_max).upper + step;

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n_max));
  double w0 = start;
  double f0 = f(w0);
  if (f0 == 0.0) roots.push_back(w0);
  while (static_cast<int>(roots.size()) < n_max && w0 < stop) {
    const double w1 = w0 + step;
    const double f1 = f(w1);
    if (f1 == 0.0) {
      roots.push_back(w1);
    } else if (f0 != 0.0 && !same_sign(f0, f1)) {
      roots.push_back(refine_root(f, w0, w1, f0, f1));
    }
    w0 = w1;
    f0 = f1;
  }

  if (static_cast<int>(roots.size()) < n_max) {
    std::ostringstream msg;
    msg << "find_roots: bracketed " << roots.size() << " of " << n_max << " roots below omega = "
        << stop << " (nu = " << nu.value() << ")";
    throw RootLossError(msg.str());
  }
  for (int i = 0; i < n_max; ++i) {
    const auto bounds = root_bounds(geom, nu, i + 1);
    const double root = roots[static_cast<std::size_t>(i)];
    if (root < bounds.lower * (1.0 - 1e-9) || root > bounds.upper * (1.0 + 1e-9)) {
      std::ostringstream msg;
      msg << "find_roots: root " << i + 1 << " at omega = " << root << " lies outside ["
          << bounds.lower << ", " << bounds.upper << "]; a root was skipped (nu = " << nu.value()
          << ")";
      throw RootLossError(msg.str());
    }
  }
  return roots;
}

double degeneracy(int dim, BesselOrder nu) {
  if (dim < 3) throw DomainError("degeneracy: dimension must be >= 3");
  const int offset = nu.twice() - (dim - 2);
  if (offset < 0 || offset % 2 != 0) {
    throw DomainError("degeneracy: order " + std::to_string(nu.value()) +
                      " is not k + (D-2)/2 for D = " + std::to_string(dim));
  }
  const double v = nu.value();
  const double half_d = 0.5 * (dim - 2);
  const double value = 2.0 * v * specfun::gamma_ratio(v + half_d, v - half_d + 1.0) /
                       specfun::gamma_fn(dim - 1.0);
  if (value < 9007199254740992.0) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9 * std::max(1.0, rounded)) {
      throw std::logic_error("degeneracy: non-integral value " + std::to_string(value));
    }
    return rounded;
  }
  return value;
}

}  // namespace casimir::spectrum
