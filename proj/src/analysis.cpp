#include "steklov/analysis.hpp"

#include <cmath>
#include <sstream>

#include "steklov/csv.hpp"
#include "steklov/error.hpp"

namespace steklov {

ModulusEstimate modulus_of_continuity(const TargetFunction& f, double delta, int probes) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (probes < 1000) throw Error(ErrorCode::InvalidArgument, "need at least 1000 probes");

  const Interval& d = f.domain();
  constexpr int kOffsetsPerSide = 16;
  std::vector<double> offsets;
  offsets.reserve(2 * kOffsetsPerSide);
  for (int i = 1; i <= kOffsetsPerSide; ++i) {
    double s = delta * i / kOffsetsPerSide;
    if (i == kOffsetsPerSide) s = std::nextafter(delta, 0.0);
    offsets.push_back(s);
    offsets.push_back(-s);
  }

  const auto bases = uniform_points(d, probes);
  ModulusEstimate estimate;
  for (double x : bases) {
    const double fx = f(x);
    for (double s : offsets) {
      const double t = std::clamp(x + s, d.lo, d.hi);
      estimate.grid_lower = std::max(estimate.grid_lower, std::abs(f(t) - fx));
    }
  }

  if (const auto& lipschitz = f.lipschitz_constant()) {
    const double spacing = d.length() / (probes - 1);
    const double upper = estimate.grid_lower + *lipschitz * (spacing + delta / kOffsetsPerSide);
    estimate.value = std::min(*lipschitz * delta, upper);
  } else {
    estimate.value = estimate.grid_lower;
    estimate.estimated = true;
  }
  return estimate;
}

TheoreticalBound theoretical_bound(const TargetFunction& f, const OperatorConfig& cfg,
                                   double first_moment) {
  if (cfg.r() < 2) {
    throw Error(ErrorCode::OrderOutOfScope,
                "the modulus-of-continuity error bound is stated for r >= 2 only");
  }
  TheoreticalBound bound;
  const double delta = 1.0 / cfg.n();
  if (const auto& lipschitz = f.lipschitz_constant()) {
    bound.omega = *lipschitz * delta;
  } else {
    bound.omega = modulus_of_continuity(f, delta).value;
    bound.omega_estimated = true;
  }
  bound.kernel_floor = cfg.kernel()(cfg.r() + 1.0);
  bound.first_moment = first_moment;
  bound.value = bound.omega / bound.kernel_floor * (1.0 + first_moment);
  return bound;
}

double measure_sup_error(const TargetFunction& f, const OperatorConfig& cfg, int grid_points) {
  if (grid_points < 100) {
    throw Error(ErrorCode::InvalidArgument, "sup error needs at least 100 grid points");
  }
  double worst = 0.0;
  for (const GridValue& v : evaluate_on_grid(f, cfg, grid_points)) {
    worst = std::max(worst, std::abs(v.value - f(v.x)));
  }
  return worst;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out << "n,sup_error,bound,empirical_order\n";
  auto field = [&](const std::optional<double>& v) {
    if (v) out << format_double(*v);
  };
  for (const ConvergenceRow& row : rows) {
    out << row.n << ',';
    field(row.sup_error);
    out << ',';
    field(row.bound);
    out << ',';
    field(row.empirical_order);
    out << '\n';
  }
  return out.str();
}

std::vector<int> ConvergenceReport::bound_violations() const {
  std::vector<int> violations;
  for (const ConvergenceRow& row : rows) {
    if (row.sup_error && row.bound && *row.sup_error > *row.bound) violations.push_back(row.n);
  }
  return violations;
}

ConvergenceReport convergence_study(const TargetFunction& f, const DensityFunction& kernel,
                                    int r, const std::vector<int>& n_list, int grid_points) {
  if (n_list.empty()) throw Error(ErrorCode::InvalidArgument, "n list is empty");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "n list must be positive and strictly ascending");
    }
  }

  ConvergenceReport report;
  report.kernel = kernel.name();
  report.function = f.name();
  report.r = r;
  report.grid_points = grid_points;
  report.omega_estimated = r >= 2 && !f.lipschitz_constant();
  if (r >= 2) report.first_moment = discrete_absolute_moment(kernel, 1).value;

  for (int n : n_list) {
    ConvergenceRow row;
    row.n = n;
    try {
      const OperatorConfig cfg(f, n, r, kernel);
      row.sup_error = measure_sup_error(f, cfg, grid_points);
      if (report.first_moment) row.bound = theoretical_bound(f, cfg, *report.first_moment).value;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidRange) throw;
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }

  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const ConvergenceRow& previous = report.rows[i - 1];
    ConvergenceRow& current = report.rows[i];
    if (current.n != 2 * previous.n || !previous.sup_error || !current.sup_error) continue;
    if (*previous.sup_error > 0.0 && *current.sup_error > 0.0) {
      current.empirical_order = std::log2(*previous.sup_error / *current.sup_error);
    }
  }
  return report;
}

}  // namespace steklov
