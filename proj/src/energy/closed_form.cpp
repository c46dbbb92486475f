#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/energy.hpp"
#include "casimir/specfun.hpp"

namespace casimir::energy {
namespace {

using std::numbers::pi;

CorrectionTerm term(std::int64_t num, std::int64_t den, int pi_power, int eta_power, int zeta_arg) {
  return {Rational(num, den), pi_power, eta_power, zeta_arg};
}

std::vector<ClosedFormEntry> build_table() {
  std::vector<ClosedFormEntry> t;
  t.push_back({4, Rational(3, 128), 2, {}});
  t.push_back({5, Rational(1, 32), 3,
               {term(-1, 8, 0, 2, 4), term(-7, 64, 0, 4, 4), term(-1, 96, 0, 4, 2)}});
  t.push_back({6, Rational(15, 1024), 3, {term(-4, 15, 0, 2, 5)}});
  t.push_back({7, Rational(3, 128), 4,
               {term(-5, 12, 0, 2, 6), term(3, 64, 0, 4, 4), term(155, 1536, 1, 6, 6),
                term(35, 768, 2, 6, 4), term(1, 256, 0, 6, 2)}});
  t.push_back({8, Rational(105, 8192), 4, {term(-4, 7, 0, 2, 7), term(64, 525, 0, 4, 5)}});
  t.push_back({9, Rational(3, 128), 5,
               {term(-35, 48, 0, 2, 8), term(259, 1152, 0, 4, 6), term(-175, 7168, 0, 6, 4),
                term(-4445, 49152, 6, 8, 8), term(-5425, 73729, 0, 8, 6),
                term(-27195, 1105920, 2, 8, 4), term(-175, 86016, 0, 8, 2)}});
  t.push_back({10, Rational(945, 65536), 5,
               {term(-8, 9, 0, 2, 9), term(16, 45, 0, 4, 7), term(-256, 3675, 0, 6, 5)}});
  t.push_back({11, Rational(15, 512), 6,
               {term(-21, 20, 0, 2, 10), term(329, 640, 0, 4, 8), term(-3229, 23040, 0, 6, 6),
                term(245, 16384, 0, 8, 4), term(10731, 131072, 8, 10, 10),
                term(6223, 65536, 6, 10, 8), term(10199, 196608, 4, 10, 6),
                term(22603, 1474560, 2, 10, 4), term(569625, 8388608, 0, 10, 2)}});
  return t;
}

// Coefficient of eta^e predicted by the bulk expansion of the mode sum:
// (g_{D-2-e} / g_{D-2}) Gamma((D-1-e)/2) Gamma((D+1-e)/2)
//                     / (Gamma((D-1)/2) Gamma((D+1)/2)),
// with g_j the coefficients of the degeneracy polynomial.
std::optional<double> bulk_coefficient(int dim, int e) {
  if (e < 2 || e % 2 != 0 || e > dim - 2) return std::nullopt;
  const auto p = nu_degeneracy_polynomial(dim);  // p_{j+1} = g_j
  const double g_top = p[static_cast<std::size_t>(dim - 1)].to_double();
  const double g_low = p[static_cast<std::size_t>(dim - 1 - e)].to_double();
  const double gammas = specfun::gamma_fn(0.5 * (dim - 1 - e)) * specfun::gamma_fn(0.5 * (dim + 1 - e)) /
                        (specfun::gamma_fn(0.5 * (dim - 1)) * specfun::gamma_fn(0.5 * (dim + 1)));
  return g_low / g_top * gammas;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed-form";
    case Method::numeric:
      return "numeric";
    case Method::plate_limit:
      return "plate-limit";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "closed-form" || name == "closed_form") return Method::closed_form;
  if (name == "numeric") return Method::numeric;
  if (name == "plate-limit" || name == "plate_limit") return Method::plate_limit;
  throw DomainError("unknown method '" + name + "' (expected closed-form, numeric or plate-limit)");
}

std::string to_string(TermStatus s) {
  switch (s) {
    case TermStatus::verified:
      return "verified";
    case TermStatus::mismatch:
      return "mismatch";
    case TermStatus::unverified:
      return "unverified";
  }
  return "unknown";
}

double surface_area(int dim, double radius) {
  if (dim < 2) throw DomainError("surface_area: dimension must be >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("surface_area: radius must be positive");
  return 2.0 * std::pow(pi, 0.5 * dim) * std::pow(radius, dim - 1) / specfun::gamma_fn(0.5 * dim);
}

double plate_coefficient(int dim) {
  if (dim < 3) throw DomainError("plate_limit: dimension must be >= 3");
  const double h = 0.5 * (dim + 1);
  return specfun::gamma_fn(h) / std::pow(4.0 * pi, h);
}

double plate_limit(int dim, double gap) {
  if (!(gap > 0.0) || !std::isfinite(gap)) throw DomainError("plate_limit: gap must be positive");
  return -plate_coefficient(dim) * specfun::riemann_zeta_int(dim + 1) / std::pow(gap, dim);
}

double CorrectionTerm::value(double eta, int dim) const {
  return coefficient.to_double() / std::pow(pi, pi_power) * std::pow(eta, eta_power) *
         specfun::riemann_zeta_int(zeta_arg) / specfun::riemann_zeta_int(dim + 1);
}

double ClosedFormEntry::leading_value() const {
  return leading.to_double() / std::pow(pi, leading_pi_power);
}

const std::vector<ClosedFormEntry>& closed_form_table() {
  static const std::vector<ClosedFormEntry> table = build_table();
  return table;
}

const ClosedFormEntry& closed_form_entry(int dim) {
  if (dim < kClosedFormMinDim || dim > kClosedFormMaxDim) {
    throw UnsupportedDimensionError("closed form supports D in [4,11] (got D = " + std::to_string(dim) +
                                    "); use the numeric method");
  }
  return closed_form_table()[static_cast<std::size_t>(dim - kClosedFormMinDim)];
}

EnergyResult energy_closed_form(const Geometry& geom) {
  const int dim = geom.dim();
  const auto& entry = closed_form_entry(dim);
  const double eta = geom.eta();
  if (!(eta < 1.0)) {
    std::ostringstream msg;
    msg << "closed form requires eta < 1 (got eta = " << eta << "); use the numeric method";
    throw OutOfRegimeError(msg.str());
  }
  double bracket = 1.0;
  for (const auto& c : entry.corrections) bracket += c.value(eta, dim);

  const double geometry_factor = std::pow(geom.mean_radius() / geom.inner(), dim - 1);
  EnergyResult r;
  r.method = Method::closed_form;
  r.per_inner_area = -entry.leading_value() * geometry_factor * specfun::riemann_zeta_int(dim + 1) /
                     std::pow(geom.gap(), dim) * bracket;
  r.total_energy = r.per_inner_area * surface_area(dim, geom.inner());
  return r;
}

EnergyResult energy_plate_limit(const Geometry& geom) {
  EnergyResult r;
  r.method = Method::plate_limit;
  r.per_inner_area = plate_limit(geom.dim(), geom.gap());
  r.total_energy = r.per_inner_area * surface_area(geom.dim(), geom.inner());
  return r;
}

std::vector<AuditRow> coefficient_audit() {
  std::vector<AuditRow> rows;
  for (const auto& entry : closed_form_table()) {
    AuditRow row;
    row.dim = entry.dim;
    row.closed_form_coefficient = entry.leading_value();
    row.plate_coefficient = plate_coefficient(entry.dim);
    row.rel_diff = std::abs(row.closed_form_coefficient - row.plate_coefficient) /
                   std::abs(row.plate_coefficient);
    row.pass = row.rel_diff <= kAuditTolerance;
    for (const auto& c : entry.corrections) {
      AuditCorrection ac{c, std::nullopt, TermStatus::unverified};
      const bool bulk_shape = c.pi_power == 0 && c.zeta_arg == entry.dim + 1 - c.eta_power;
      if (bulk_shape) ac.expected = bulk_coefficient(entry.dim, c.eta_power);
      if (ac.expected) {
        const double diff = std::abs(c.coefficient.to_double() - *ac.expected);
        ac.status = diff <= kAuditTolerance * std::abs(*ac.expected) ? TermStatus::verified
                                                                     : TermStatus::mismatch;
      }
      row.corrections.push_back(ac);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace casimir::energy
