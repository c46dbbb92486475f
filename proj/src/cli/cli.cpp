#include "casimir/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/energy.hpp"
#include "casimir/errors.hpp"
#include "casimir/spectrum.hpp"

namespace casimir::cli {
namespace {

using json = nlohmann::ordered_json;

const char* const kCsvHeader =
    "D,eta,a,b,method,energy_total,energy_per_area,scaled_plate_ratio,k_max,trunc_est";

struct ToleranceFlags {
  regsum::QuadratureConfig q;
  int k_max = 0;  // 0 means automatic

  void attach(CLI::App* app) {
    app->add_option("--rel-tol", q.rel_tol, "Relative quadrature tolerance")->capture_default_str();
    app->add_option("--abs-tol", q.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
    app->add_option("--trunc", q.truncation, "Bose-factor truncation parameter T (>= 30)")
        ->capture_default_str();
    app->add_option("--k-sum-tol", q.k_sum_tol, "Relative tolerance of the angular sum")
        ->capture_default_str();
    app->add_option("--k-max", k_max, "Fixed largest angular index (0 = automatic)")
        ->check(CLI::NonNegativeNumber);
  }

  std::optional<int> fixed_k_max() const {
    return k_max > 0 ? std::optional<int>(k_max) : std::nullopt;
  }
};

/// One evaluated (geometry, method) pair, in the sweep column layout.
struct Record {
  int dim = 0;
  double eta = 0.0;
  double inner = 0.0;
  double outer = 0.0;
  energy::Method method = energy::Method::numeric;
  energy::EnergyResult result;
  double scaled_plate_ratio = 0.0;
};

Record make_record(const spectrum::Geometry& geom, double eta, const energy::EnergyResult& r) {
  Record rec{geom.dim(), eta, geom.inner(), geom.outer(), r.method, r, 0.0};
  rec.scaled_plate_ratio = r.per_inner_area / energy::plate_limit(geom.dim(), geom.gap());
  return rec;
}

std::string csv_row(const Record& r) {
  std::ostringstream s;
  s << r.dim << ',' << format_double(r.eta) << ',' << format_double(r.inner) << ','
    << format_double(r.outer) << ',' << energy::to_string(r.method) << ','
    << format_double(r.result.total_energy) << ',' << format_double(r.result.per_inner_area) << ','
    << format_double(r.scaled_plate_ratio) << ',' << r.result.diagnostics.k_max << ','
    << format_double(r.result.diagnostics.truncation_estimate);
  return s.str();
}

json json_row(const Record& r) {
  return json{{"schema", 1},
              {"D", r.dim},
              {"eta", r.eta},
              {"a", r.inner},
              {"b", r.outer},
              {"method", energy::to_string(r.method)},
              {"energy_total", r.result.total_energy},
              {"energy_per_area", r.result.per_inner_area},
              {"scaled_plate_ratio", r.scaled_plate_ratio},
              {"k_max", r.result.diagnostics.k_max},
              {"trunc_est", r.result.diagnostics.truncation_estimate}};
}

/// Closed-form requests are checked against the supported dimensions before
/// any geometry is required.
void check_method_dimension(energy::Method m, int dim) {
  if (m == energy::Method::closed_form) energy::closed_form_entry(dim);
  if (m == energy::Method::numeric && dim < 4) {
    throw DomainError("numeric method requires D >= 4");
  }
}

// ---------------------------------------------------------------------------

struct EnergyCommand {
  int dim = 0;
  std::optional<double> inner;
  std::optional<double> outer;
  std::optional<double> eta;
  std::string method = "numeric";
  bool as_json = false;
  ToleranceFlags tol;

  void attach(CLI::App* app) {
    app->add_option("--dim", dim, "Space dimension D")->required();
    app->add_option("--inner", inner, "Inner radius a");
    app->add_option("--outer", outer, "Outer radius b");
    app->add_option("--eta", eta, "Gap ratio eta = (b - a)/sqrt(ab), with sqrt(ab) = 1");
    app->add_option("--method", method, "closed-form, numeric or plate-limit")->capture_default_str();
    app->add_flag("--json", as_json, "Emit a JSON object instead of CSV");
    tol.attach(app);
  }

  int run(std::ostream& out) const {
    const auto m = energy::parse_method(method);
    check_method_dimension(m, dim);
    tol.q.validate();
    const auto geom = geometry();
    const auto result = energy::compute_energy(geom, m, tol.q, tol.fixed_k_max());
    const auto rec = make_record(geom, eta ? *eta : geom.eta(), result);
    if (as_json) {
      out << json_row(rec).dump() << '\n';
    } else {
      out << kCsvHeader << '\n' << csv_row(rec) << '\n';
    }
    return kExitOk;
  }

  spectrum::Geometry geometry() const {
    if (eta && (inner || outer)) throw DomainError("give either --eta or --inner/--outer, not both");
    if (eta) return spectrum::Geometry::from_eta(dim, *eta);
    if (!inner || !outer) throw DomainError("specify --inner and --outer, or --eta");
    return spectrum::Geometry(dim, *inner, *outer);
  }
};

// ---------------------------------------------------------------------------

struct SweepCommand {
  int dim = 0;
  std::vector<double> etas;
  std::vector<std::string> methods{"numeric"};
  std::string out_path;
  bool as_json = false;
  ToleranceFlags tol;

  void attach(CLI::App* app) {
    app->add_option("--dim", dim, "Space dimension D")->required();
    app->add_option("--eta", etas, "Gap ratios (comma separated or repeated)")->delimiter(',');
    app->add_option("--method", methods, "Methods (comma separated or repeated)")->delimiter(',');
    app->add_option("--out", out_path, "Output file (default: standard output)");
    app->add_flag("--json", as_json, "Emit a JSON array instead of CSV");
    tol.attach(app);
  }

  int run(std::ostream& out, std::ostream& err) const {
    if (etas.empty()) throw DomainError("sweep: at least one --eta value is required");
    if (methods.empty()) throw DomainError("sweep: at least one --method is required");
    std::vector<energy::Method> parsed;
    for (const auto& name : methods) {
      const auto m = energy::parse_method(name);
      if (std::find(parsed.begin(), parsed.end(), m) != parsed.end()) {
        throw DomainError("sweep: method '" + name + "' given twice");
      }
      check_method_dimension(m, dim);
      parsed.push_back(m);
    }
    std::vector<double> sorted = etas;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (!(sorted[i] > 0.0) || !(sorted[i] < 1.0)) {
        throw DomainError("sweep: eta values must lie in (0, 1)");
      }
      if (i > 0 && sorted[i] == sorted[i - 1]) throw DomainError("sweep: duplicate eta value");
    }
    tol.q.validate();

    std::vector<std::pair<double, energy::Method>> points;
    for (double eta : sorted) {
      for (auto m : parsed) points.emplace_back(eta, m);
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::out | std::ios::trunc);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
      }
      sink = &file;
    }
    const auto records = evaluate(points);
    if (as_json) {
      json arr = json::array();
      for (const auto& r : records) arr.push_back(json_row(r));
      *sink << arr.dump(2) << '\n';
    } else {
      *sink << kCsvHeader << '\n';
      for (const auto& r : records) *sink << csv_row(r) << '\n';
    }
    sink->flush();
    if (!*sink) {
      err << "error: write to '" << (out_path.empty() ? "stdout" : out_path) << "' failed\n";
      return kExitIo;
    }
    return kExitOk;
  }

  // Points run concurrently in batches; results keep input order.
  std::vector<Record> evaluate(const std::vector<std::pair<double, energy::Method>>& points) const {
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Record> records;
    records.reserve(points.size());
    for (std::size_t start = 0; start < points.size(); start += width) {
      std::vector<std::future<Record>> batch;
      const std::size_t stop = std::min(points.size(), start + width);
      for (std::size_t i = start; i < stop; ++i) {
        batch.push_back(std::async(std::launch::async, [this, p = points[i]] {
          const auto geom = spectrum::Geometry::from_eta(dim, p.first);
          return make_record(geom, p.first, energy::compute_energy(geom, p.second, tol.q, tol.fixed_k_max()));
        }));
      }
      for (auto& f : batch) records.push_back(f.get());
    }
    return records;
  }
};

// ---------------------------------------------------------------------------

struct SpectrumCommand {
  int dim = 0;
  double inner = 0.0;
  double outer = 0.0;
  int k = 0;
  int n_max = 5;
  bool as_json = false;

  void attach(CLI::App* app) {
    app->add_option("--dim", dim, "Space dimension D")->required();
    app->add_option("--inner", inner, "Inner radius a")->required();
    app->add_option("--outer", outer, "Outer radius b")->required();
    app->add_option("--k", k, "Angular index")->capture_default_str();
    app->add_option("--n-max", n_max, "Number of radial roots")->capture_default_str();
    app->add_flag("--json", as_json, "Emit a JSON array instead of CSV");
  }

  int run(std::ostream& out) const {
    const spectrum::Geometry geom(dim, inner, outer);
    const auto nu = spectrum::order_for(dim, k);
    const auto roots = spectrum::find_roots(geom, nu, n_max);
    json arr = json::array();
    if (!as_json) out << "n,omega_exact,omega_asymptotic,rel_diff\n";
    for (int n = 1; n <= n_max; ++n) {
      const double exact = roots[static_cast<std::size_t>(n - 1)];
      const double asym = spectrum::asymptotic_omega(geom, nu, n);
      const double rel = std::abs(asym - exact) / exact;
      if (as_json) {
        arr.push_back({{"schema", 1},
                       {"D", dim},
                       {"k", k},
                       {"nu", nu.value()},
                       {"n", n},
                       {"omega_exact", exact},
                       {"omega_asymptotic", asym},
                       {"rel_diff", rel}});
      } else {
        out << n << ',' << format_double(exact) << ',' << format_double(asym) << ','
            << format_double(rel) << '\n';
      }
    }
    if (as_json) out << arr.dump(2) << '\n';
    return kExitOk;
  }
};

// ---------------------------------------------------------------------------

std::string pi_fraction(const Rational& c, int pi_power) {
  std::string s = c.str();
  if (pi_power == 0) return s;
  s += pi_power == 1 ? " / pi" : " / pi^" + std::to_string(pi_power);
  return s;
}

struct AuditCommand {
  bool as_json = false;
  bool include_corrections = false;

  void attach(CLI::App* app) {
    app->add_flag("--json", as_json, "Emit a JSON array");
    app->add_flag("--include-corrections", include_corrections,
                  "Append the eta-correction terms with their check status");
  }

  int run(std::ostream& out) const {
    const auto rows = energy::coefficient_audit();
    bool all_pass = true;
    json arr = json::array();
    if (!as_json) out << "D,closed_form,plate_limit,rel_diff,status\n";
    for (const auto& row : rows) {
      all_pass = all_pass && row.pass;
      const auto& entry = energy::closed_form_entry(row.dim);
      if (as_json) {
        arr.push_back({{"schema", 1},
                       {"kind", "leading"},
                       {"D", row.dim},
                       {"coefficient", pi_fraction(entry.leading, entry.leading_pi_power)},
                       {"closed_form", row.closed_form_coefficient},
                       {"plate_limit", row.plate_coefficient},
                       {"rel_diff", row.rel_diff},
                       {"status", row.pass ? "pass" : "fail"}});
      } else {
        out << row.dim << ',' << format_double(row.closed_form_coefficient) << ','
            << format_double(row.plate_coefficient) << ',' << format_double(row.rel_diff) << ','
            << (row.pass ? "pass" : "FAIL") << '\n';
      }
    }
    if (include_corrections) {
      if (!as_json) out << "\nD,eta_power,coefficient,zeta_arg,expected,status\n";
      for (const auto& row : rows) {
        for (const auto& c : row.corrections) {
          const std::string coeff = pi_fraction(c.term.coefficient, c.term.pi_power);
          if (as_json) {
            json j{{"schema", 1},
                   {"kind", "correction"},
                   {"D", row.dim},
                   {"eta_power", c.term.eta_power},
                   {"coefficient", coeff},
                   {"zeta_arg", c.term.zeta_arg},
                   {"status", energy::to_string(c.status)}};
            j["expected"] = c.expected ? json(*c.expected) : json(nullptr);
            arr.push_back(std::move(j));
          } else {
            out << row.dim << ',' << c.term.eta_power << ',' << coeff << ',' << c.term.zeta_arg << ','
                << (c.expected ? format_double(*c.expected) : std::string()) << ','
                << energy::to_string(c.status) << '\n';
          }
        }
      }
    }
    if (as_json) out << arr.dump(2) << '\n';
    return all_pass ? kExitOk : kExitAuditFailure;
  }
};

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir energy between concentric D-spheres"};
  app.require_subcommand(1);

  EnergyCommand energy_cmd;
  SweepCommand sweep_cmd;
  SpectrumCommand spectrum_cmd;
  AuditCommand audit_cmd;
  auto* energy_app = app.add_subcommand("energy", "Energy of one configuration");
  auto* sweep_app = app.add_subcommand("sweep", "Energies over a list of eta values (sqrt(ab) = 1)");
  auto* spectrum_app = app.add_subcommand("spectrum", "Exact and asymptotic radial frequencies");
  auto* audit_app = app.add_subcommand("audit", "Check the closed-form coefficients");
  energy_cmd.attach(energy_app);
  sweep_cmd.attach(sweep_app);
  spectrum_cmd.attach(spectrum_app);
  audit_cmd.attach(audit_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*energy_app) return energy_cmd.run(out);
    if (*sweep_app) return sweep_cmd.run(out, err);
    if (*spectrum_app) return spectrum_cmd.run(out);
    if (*audit_app) return audit_cmd.run(out);
  } catch (const energy::ConvergenceError& e) {
    const auto& d = e.partial().diagnostics;
    err << "error: " << e.what() << "\n  partial total = " << format_double(e.partial().total_energy)
        << ", k_max = " << d.k_max << ", truncation estimate = " << format_double(d.truncation_estimate)
        << '\n';
    return kExitConvergence;
  } catch (const RootLossError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const DivergentTailError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace casimir::cli
