#include "steklov/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "steklov/error.hpp"
#include "steklov/parallel.hpp"
#include "steklov/steklov_mean.hpp"

namespace steklov {
namespace {

double snap_to_integer(double v) {
  const double nearest = std::round(v);
  return std::abs(v - nearest) <= 1e-9 * std::max(1.0, std::abs(v)) ? nearest : v;
}

void check_point(const Interval& interval, double x) {
  const double slack = interval.slack();
  if (!(x >= interval.lo - slack && x <= interval.hi + slack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "operator evaluated at " << x << " outside [" << interval.lo << ", "
        << interval.hi << "]";
    throw Error(ErrorCode::DomainViolation, msg.str());
  }
}

double kernel_sum(const DensityFunction& kernel, double nx, IndexRange range) {
  double sum = 0.0;
  for (long long k = range.k_min; k <= range.k_max; ++k) {
    sum += kernel(nx - static_cast<double>(k));
  }
  return sum;
}

}  // namespace

IndexRange index_range(int n, int r, const Interval& interval) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be >= 0");
  IndexRange range;
  range.k_min = static_cast<long long>(std::ceil(snap_to_integer(n * interval.lo)));
  range.k_max = static_cast<long long>(std::floor(snap_to_integer(n * interval.hi))) - r;
  if (range.k_min > range.k_max) {
    std::ostringstream msg;
    msg << "empty index range: ceil(n a) = " << range.k_min << " > floor(n b) - r = "
        << range.k_max << " for n = " << n << ", r = " << r << ", [a, b] = ["
        << interval.lo << ", " << interval.hi << "]";
    throw Error(ErrorCode::InvalidRange, msg.str());
  }
  return range;
}

OperatorConfig::OperatorConfig(int n, int r, Interval interval, DensityFunction kernel)
    : n_(n), r_(r), interval_(interval), kernel_(std::move(kernel)) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 1");
  SteklovConfig{r, 1.0}.validate();
  if (!(interval.lo < interval.hi)) {
    throw Error(ErrorCode::InvalidArgument, "operator interval must satisfy a < b");
  }
  range_ = index_range(n, r, interval);
}

OperatorConfig::OperatorConfig(const TargetFunction& f, int n, int r, DensityFunction kernel)
    : OperatorConfig(n, r, f.domain(), std::move(kernel)) {}

double classical_operator(const TargetFunction& f, int n, const DensityFunction& kernel,
                          double x) {
  const IndexRange range = index_range(n, 0, f.domain());
  check_point(f.domain(), x);
  const double nx = n * x;
  double numerator = 0.0;
  double denominator = 0.0;
  for (long long k = range.k_min; k <= range.k_max; ++k) {
    const double weight = kernel(nx - static_cast<double>(k));
    numerator += f(static_cast<double>(k) / n) * weight;
    denominator += weight;
  }
  return numerator / denominator;
}

SteklovOperator::SteklovOperator(const TargetFunction& f, OperatorConfig cfg,
                                 const QuadratureRule& rule)
    : cfg_(std::move(cfg)), denominator_floor_(cfg_.kernel()(cfg_.r() + 1.0)) {
  const Interval& domain = f.domain();
  const Interval& interval = cfg_.interval();
  if (interval.lo < domain.lo - domain.slack() || interval.hi > domain.hi + domain.slack()) {
    throw Error(ErrorCode::DomainViolation,
                "operator interval is not contained in the domain of '" + f.name() + "'");
  }

  const IndexRange range = cfg_.range();
  const SteklovConfig steklov{cfg_.r(), 1.0 / cfg_.n()};
  means_.resize(range.size());
  parallel_for(means_.size(), [&](std::size_t i) {
    const double node = static_cast<double>(range.k_min + static_cast<long long>(i)) / cfg_.n();
    means_[i] = steklov_mean(f, steklov, node, rule);
  });
}

double SteklovOperator::denominator(double x) const {
  return kernel_sum(cfg_.kernel(), cfg_.n() * x, cfg_.range());
}

double SteklovOperator::operator()(double x) const {
  check_point(cfg_.interval(), x);
  const IndexRange range = cfg_.range();
  const DensityFunction& kernel = cfg_.kernel();
  const double nx = cfg_.n() * x;
  double numerator = 0.0;
  double denominator = 0.0;
  for (long long k = range.k_min; k <= range.k_max; ++k) {
    const double weight = kernel(nx - static_cast<double>(k));
    numerator += means_[static_cast<std::size_t>(k - range.k_min)] * weight;
    denominator += weight;
  }
  if (denominator < denominator_floor_ * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "kernel sum " << denominator << " at x = " << x << " is below phi(r + 1) = "
        << denominator_floor_;
    throw std::logic_error(msg.str());
  }
  return numerator / denominator;
}

double steklov_operator(const TargetFunction& f, const OperatorConfig& cfg, double x) {
  return SteklovOperator(f, cfg)(x);
}

std::vector<double> uniform_points(const Interval& interval, int grid_points) {
  if (grid_points < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> points(static_cast<std::size_t>(grid_points));
  const double step = interval.length() / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) points[static_cast<std::size_t>(i)] = interval.lo + step * i;
  points.back() = interval.hi;
  return points;
}

std::vector<GridValue> evaluate_on_grid(const TargetFunction& f, const OperatorConfig& cfg,
                                        int grid_points) {
  const auto xs = uniform_points(cfg.interval(), grid_points);
  const SteklovOperator op(f, cfg);
  std::vector<GridValue> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { values[i] = {xs[i], op(xs[i])}; });
  return values;
}

SupNormBoundCheck sup_norm_bound_check(const TargetFunction& f, const OperatorConfig& cfg,
                                       int grid_points) {
  if (grid_points < 100) {
    throw Error(ErrorCode::InvalidArgument, "bound check needs at least 100 grid points");
  }
  SupNormBoundCheck check;
  for (const GridValue& v : evaluate_on_grid(f, cfg, grid_points)) {
    check.measured_sup = std::max(check.measured_sup, std::abs(v.value));
  }
  check.f_sup_norm = sup_norm(f);
  const double coefficient_mass = std::ldexp(1.0, cfg.r()) - 1.0;
  check.bound = coefficient_mass * check.f_sup_norm / cfg.kernel()(cfg.r() + 1.0);
  check.pass = check.measured_sup <= check.bound;
  return check;
}

}  // namespace steklov
