#include "steklov/run.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "steklov/analysis.hpp"
#include "steklov/catalog.hpp"
#include "steklov/csv.hpp"
#include "steklov/error.hpp"
#include "steklov/moments.hpp"
#include "steklov/operators.hpp"
#include "steklov/steklov_mean.hpp"

namespace steklov {
namespace {

using Json = nlohmann::ordered_json;

void add_stamp(Json& meta, bool stamp) {
  if (!stamp) return;
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  meta["generated_at"] = buffer;
}

void emit_data(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out.empty()) {
    out << text;
  } else {
    write_text_file(config.out, text);
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

int run_validate_kernel(const RunConfig& config, std::ostream& out) {
  const ValidationReport report =
      validate_sigmoidal(sigmoidal_by_name(config.kernel), config.r_max, config.grid_resolution);
  Json doc;
  doc["kernel"] = report.kernel;
  doc["r_max"] = report.r_max;
  doc["grid_resolution"] = report.grid_resolution;
  doc["all_passed"] = report.all_passed();
  Json checks = Json::array();
  for (const ConditionCheck& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"metric", c.metric},
                      {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  out << doc.dump(2) << '\n';
  return report.all_passed() ? kExitSuccess : kExitCheckFailed;
}

int run_moments(const RunConfig& config, std::ostream& out) {
  const DensityFunction phi = density_of(sigmoidal_by_name(config.kernel));
  AbsoluteMomentOptions options;
  options.tol = config.tol;
  options.grid_points = config.moment_grid;
  const AbsoluteMoment moment = discrete_absolute_moment(phi, config.beta, options);

  Json doc;
  doc["kernel"] = config.kernel;
  doc["beta"] = config.beta;
  doc["value"] = moment.value;
  doc["argmax_u"] = moment.argmax_u;
  doc["grid_points"] = moment.grid_points;
  doc["grid_spacing"] = moment.grid_spacing;
  doc["sup_is_grid_lower_estimate"] = true;
  doc["tol"] = options.tol;
  doc["max_truncation_radius"] = moment.max_radius;
  doc["max_tail_increment"] = moment.max_tail_increment;
  if (config.moment_u || config.moment_n) {
    const MomentQuery q{config.beta, config.moment_u.value_or(0.0), config.moment_n.value_or(50)};
    doc["truncated_moment"] = {{"u", q.u}, {"n", q.n},
                               {"value", truncated_algebraic_moment(phi, q)}};
  }
  out << doc.dump(2) << '\n';
  return kExitSuccess;
}

int run_steklov_mean(const RunConfig& config, std::ostream& out) {
  const TargetFunction f = resolve_function(config.function);
  const SteklovConfig cfg{config.r, config.h};
  const QuadratureRule rule = QuadratureRule::gauss_legendre(config.quadrature_points);
  Json doc;
  doc["function"] = f.name();
  doc["r"] = cfg.r;
  doc["h"] = cfg.h;
  doc["x"] = config.x;
  doc["quadrature_points"] = config.quadrature_points;
  doc["value"] = steklov_mean(f, cfg, config.x, rule);
  if (cfg.r <= kMaxOracleOrder) {
    doc["oracle_nodes_per_dim"] = config.oracle_nodes;
    doc["oracle"] = steklov_mean_oracle(f, cfg, config.x, config.oracle_nodes);
  }
  out << doc.dump(2) << '\n';
  return kExitSuccess;
}

int run_approximate(const RunConfig& config, std::ostream& out) {
  const TargetFunction f = resolve_function(config.function);
  const OperatorConfig cfg(f, config.n, config.r, density_of(sigmoidal_by_name(config.kernel)));
  const auto values = evaluate_on_grid(f, cfg, config.grid);

  std::ostringstream csv;
  csv << "x,approx,exact,abs_error\n";
  double sup_error = 0.0;
  for (const GridValue& v : values) {
    const double exact = f(v.x);
    const double error = std::abs(v.value - exact);
    sup_error = std::max(sup_error, error);
    csv << format_double(v.x) << ',' << format_double(v.value) << ',' << format_double(exact)
        << ',' << format_double(error) << '\n';
  }
  emit_data(config, csv.str(), out);

  if (!config.out.empty()) {
    Json meta;
    meta["subcommand"] = "approximate";
    meta["kernel"] = config.kernel;
    meta["function"] = f.name();
    meta["n"] = config.n;
    meta["r"] = config.r;
    meta["grid"] = config.grid;
    meta["sup_error"] = sup_error;
    meta["out"] = config.out;
    add_stamp(meta, config.stamp);
    out << meta.dump(2) << '\n';
  }
  return kExitSuccess;
}

Json report_metadata(const ConvergenceReport& report, const RunConfig& config) {
  Json meta;
  meta["kernel"] = report.kernel;
  meta["function"] = report.function;
  meta["r"] = report.r;
  meta["grid"] = report.grid_points;
  meta["first_moment"] = optional_number(report.first_moment);
  meta["omega"] = report.r < 2 ? "not-applicable"
                  : report.omega_estimated ? "estimated-omega"
                                           : "lipschitz";
  Json rows = Json::array();
  for (const ConvergenceRow& row : report.rows) {
    Json entry{{"n", row.n},
               {"sup_error", optional_number(row.sup_error)},
               {"bound", optional_number(row.bound)},
               {"empirical_order", optional_number(row.empirical_order)}};
    if (row.error) entry["error"] = *row.error;
    rows.push_back(std::move(entry));
  }
  meta["rows"] = std::move(rows);
  if (!config.out.empty()) meta["out"] = config.out;
  add_stamp(meta, config.stamp);
  return meta;
}

int run_convergence(const RunConfig& config, std::ostream& out, bool check_bounds) {
  const TargetFunction f = resolve_function(config.function);
  if (check_bounds && config.r < 2) {
    throw Error(ErrorCode::OrderOutOfScope,
                "bound-check needs r >= 2: the error bound is not stated for r = 1");
  }
  ConvergenceReport report = convergence_study(
      f, density_of(sigmoidal_by_name(config.kernel)), config.r, config.n_list, config.grid);
  if (check_bounds) {
    for (ConvergenceRow& row : report.rows) {
      if (row.bound) *row.bound *= config.bound_scale;
    }
  }

  if (!config.out.empty()) write_text_file(config.out, report.to_csv());

  Json meta = report_metadata(report, config);
  meta["subcommand"] = check_bounds ? "bound-check" : "convergence";
  if (check_bounds) {
    const auto violations = report.bound_violations();
    meta["bound_scale"] = config.bound_scale;
    meta["violations"] = violations;
    meta["pass"] = violations.empty();
    out << meta.dump(2) << '\n';
    return violations.empty() ? kExitSuccess : kExitCheckFailed;
  }
  if (config.out.empty()) {
    out << report.to_csv();
  } else {
    out << meta.dump(2) << '\n';
  }
  return kExitSuccess;
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

TargetFunction resolve_function(const std::string& spec) {
  const bool looks_like_path = spec.find('/') != std::string::npos ||
                               (spec.size() > 4 && spec.ends_with(".csv"));
  if (looks_like_path) return load_sampled_function(spec);
  return resolve_catalog_function(spec);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::ValidateKernel: return run_validate_kernel(config, out);
      case Subcommand::Moments: return run_moments(config, out);
      case Subcommand::SteklovMean: return run_steklov_mean(config, out);
      case Subcommand::Approximate: return run_approximate(config, out);
      case Subcommand::Convergence: return run_convergence(config, out, false);
      case Subcommand::BoundCheck: return run_convergence(config, out, true);
    }
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace steklov
