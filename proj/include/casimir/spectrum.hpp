#pragma once

// Radial eigenvalue layer for a Dirichlet scalar between concentric spheres
// of radii a < b in D space dimensions.

#include <vector>

#include "casimir/specfun.hpp"

namespace casimir::spectrum {

using specfun::BesselOrder;

/// Two concentric D-spheres. All derived quantities are computed from
/// (a, b) on demand so they can never drift out of sync.
class Geometry {
 public:
  /// Throws DomainError unless D >= 3 and 0 < a < b (finite).
  Geometry(int dim, double inner, double outer);

  /// Geometry with sqrt(ab) = mean_radius and b - a = eta * mean_radius.
  static Geometry from_eta(int dim, double eta, double mean_radius = 1.0);

  int dim() const { return dim_; }
  double inner() const { return inner_; }
  double outer() const { return outer_; }

  double gap() const { return outer_ - inner_; }
  double ratio() const { return inner_ / outer_; }
  double mean_radius() const;
  double eta() const { return gap() / mean_radius(); }
  double xi() const { return 2.0 * eta(); }

  /// Same dimension, both radii multiplied by sigma > 0.
  Geometry scaled(double sigma) const;

 private:
  int dim_;
  double inner_;
  double outer_;
};

/// Angular index k, radial index n, and the Bessel order nu = k + (D-2)/2.
class ModeIndex {
 public:
  ModeIndex(int dim, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  BesselOrder nu() const { return nu_; }

 private:
  int k_;
  int n_;
  BesselOrder nu_;
};

/// Order nu = k + (D-2)/2 of angular index k in D dimensions.
BesselOrder order_for(int dim, int k);

/// J_nu(omega b) Y_nu(omega a) - J_nu(omega a) Y_nu(omega b).
double freq_eq(const Geometry& geom, BesselOrder nu, double omega);

/// sqrt((n pi / (b - a))^2 + nu^2 / (ab)), the large-argument spectrum.
double asymptotic_omega(const Geometry& geom, BesselOrder nu, int n);
double asymptotic_omega(const Geometry& geom, const ModeIndex& mode);

/// Rigorous bounds on the n-th root from Dirichlet comparison of the
/// Liouville-normal form -u'' + (nu^2 - 1/4)/r^2 u = omega^2 u on [a, b].
struct RootBounds {
  double lower;
  double upper;
};
RootBounds root_bounds(const Geometry& geom, BesselOrder nu, int n);

/// First n_max positive roots of freq_eq in increasing order. Throws
/// RootLossError when the guard scan cannot account for every root.
std::vector<double> find_roots(const Geometry& geom, BesselOrder nu, int n_max);

/// Hyperspherical degeneracy
///   g(nu) = 2 nu Gamma(nu + (D-2)/2) / ((D-2)! Gamma(nu - (D-2)/2 + 1)).
/// Integer valued; returned as double because it outgrows 64-bit integers
/// at the angular indices the energy sum reaches.
double degeneracy(int dim, BesselOrder nu);

}  // namespace casimir::spectrum
