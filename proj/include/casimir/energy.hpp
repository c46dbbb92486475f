#pragma once

// Casimir energy of a Dirichlet scalar between concentric D-spheres, by
// three routes: the small-gap closed forms, the regularized mode sum, and
// the parallel-plate limit.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/rational.hpp"
#include "casimir/regsum.hpp"
#include "casimir/spectrum.hpp"

namespace casimir::energy {

using spectrum::Geometry;

enum class Method { closed_form, numeric, plate_limit };

std::string to_string(Method m);
/// Accepts "closed-form", "closed_form", "numeric", "plate-limit", "plate_limit".
Method parse_method(const std::string& name);

struct Diagnostics {
  /// Largest angular index included (numeric route).
  int k_max = 0;
  /// Bound on the discarded angular tail plus the integral truncation tails.
  double truncation_estimate = 0.0;
  /// Summed quadrature error estimates.
  double quadrature_error = 0.0;
  /// Zeta-regularized value of -(1/(4 sqrt(ab))) sum_k nu g(nu).
  double linear_part = 0.0;
  /// g(nu_k) times the Bose term, k = 0..k_max.
  std::vector<double> per_k;
};

struct EnergyResult {
  double total_energy = 0.0;
  /// Energy per unit area of the inner sphere.
  double per_inner_area = 0.0;
  Method method = Method::numeric;
  /// Contribution of the high-frequency branch, which vanishes identically.
  double large_order_part = 0.0;
  Diagnostics diagnostics;
};

/// The numeric sum hit its k cap before the tail bound met the tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, EnergyResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EnergyResult& partial() const { return partial_; }

 private:
  EnergyResult partial_;
};

/// Closed-form route asked for a dimension it has no entry for.
class UnsupportedDimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Closed-form route asked for eta >= 1, outside the small-gap regime.
class OutOfRegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// 2 pi^(D/2) r^(D-1) / Gamma(D/2). D >= 2, r > 0.
double surface_area(int dim, double radius);

/// -Gamma((D+1)/2) zeta(D+1) / ((4 pi)^((D+1)/2) d^D). D >= 3, d > 0.
double plate_limit(int dim, double gap);

/// Coefficient of the plate limit: Gamma((D+1)/2) / (4 pi)^((D+1)/2).
double plate_coefficient(int dim);

// ---------------------------------------------------------------------------
// Closed forms

enum class TermStatus { verified, mismatch, unverified };
std::string to_string(TermStatus s);

/// coefficient / pi^pi_power * eta^eta_power * zeta(zeta_arg) / zeta(D+1),
/// one entry of the bracketed series.
struct CorrectionTerm {
  Rational coefficient;
  int pi_power = 0;
  int eta_power = 0;
  int zeta_arg = 0;

  double value(double eta, int dim) const;
};

/// per_area = -leading / pi^leading_pi_power * (sqrt(ab)/a)^(D-1)
///            * zeta(D+1) / d^D * [1 + sum of corrections].
struct ClosedFormEntry {
  int dim = 0;
  Rational leading;
  int leading_pi_power = 0;
  std::vector<CorrectionTerm> corrections;

  double leading_value() const;
};

inline constexpr int kClosedFormMinDim = 4;
inline constexpr int kClosedFormMaxDim = 11;

/// Entries for D = 4..11 in order.
const std::vector<ClosedFormEntry>& closed_form_table();
/// Throws UnsupportedDimensionError outside [4, 11].
const ClosedFormEntry& closed_form_entry(int dim);

/// Throws UnsupportedDimensionError or OutOfRegimeError.
EnergyResult energy_closed_form(const Geometry& geom);

// ---------------------------------------------------------------------------
// Numeric mode sum

/// Coefficients p_j of nu * g(nu) = sum_j p_j nu^j (degree D-1).
std::vector<Rational> nu_degeneracy_polynomial(int dim);

/// Zeta-regularized sum_{k>=0} nu_k g(nu_k), nu_k = k + (D-2)/2.
Rational regularized_linear_sum(int dim);

/// E = sum_k g(nu_k) R(nu_k / sqrt(ab), b - a). With k_max unset the sum
/// stops once the angular tail bound drops below k_sum_tol * |partial|;
/// with k_max set exactly k = 0..k_max are summed. Throws ConvergenceError
/// when the cap is reached first.
EnergyResult energy_numeric(const Geometry& geom, const regsum::QuadratureConfig& q = {},
                            std::optional<int> k_max = std::nullopt);

/// Plate-limit energy density applied to the inner-sphere area.
EnergyResult energy_plate_limit(const Geometry& geom);

/// Dispatch on method.
EnergyResult compute_energy(const Geometry& geom, Method method,
                            const regsum::QuadratureConfig& q = {},
                            std::optional<int> k_max = std::nullopt);

// ---------------------------------------------------------------------------
// Audit

struct AuditCorrection {
  CorrectionTerm term;
  /// Coefficient predicted by the bulk (Euler-Maclaurin leading) expansion,
  /// when the term has that shape.
  std::optional<double> expected;
  TermStatus status = TermStatus::unverified;
};

struct AuditRow {
  int dim = 0;
  double closed_form_coefficient = 0.0;
  double plate_coefficient = 0.0;
  double rel_diff = 0.0;
  bool pass = false;
  std::vector<AuditCorrection> corrections;
};

inline constexpr double kAuditTolerance = 1e-12;

std::vector<AuditRow> coefficient_audit();

}  // namespace casimir::energy
