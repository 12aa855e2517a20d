#include "steklov/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov {
namespace {

constexpr double kStability = 1e-14;
constexpr int kMaxDoublings = 20;

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Sums term(start), term(start + step), ... in blocks that double in length
// until a whole block contributes less than kStability.
template <typename Term>
TruncatedSum outward_sum(long long start, long long step, Term&& term) {
  TruncatedSum result;
  long long block = 8;
  long long k = start;
  for (int doubling = 0; doubling <= kMaxDoublings; ++doubling) {
    double increment = 0.0;
    for (long long i = 0; i < block; ++i, k += step) increment += term(k);
    result.value += increment;
    result.radius += block;
    if (std::abs(increment) < kStability) return result;
    block = result.radius;
  }
  throw Error(ErrorCode::NonConvergentTail,
              "kernel sum did not stabilize after " + std::to_string(kMaxDoublings) +
                  " doublings");
}

std::string format_metric(const char* label, double value) {
  std::ostringstream out;
  out << label << '=' << value;
  return out.str();
}

std::vector<double> uniform_grid(double lo, double hi, int intervals) {
  std::vector<double> grid(static_cast<std::size_t>(intervals) + 1);
  const double step = (hi - lo) / intervals;
  for (int i = 0; i <= intervals; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;
  grid.back() = hi;
  return grid;
}

// Max |second difference quotient| and max signed value over [lo, hi].
struct SecondDifferenceStats {
  double max_abs = 0.0;
  double max_signed = -std::numeric_limits<double>::infinity();
};

SecondDifferenceStats second_differences(const SigmoidalFunction& s, double lo, double hi,
                                         int intervals) {
  const double h = (hi - lo) / intervals;
  SecondDifferenceStats stats;
  for (int i = 0; i <= intervals; ++i) {
    const double x = lo + h * i;
    const double d2 = (s(x + h) - 2.0 * s(x) + s(x - h)) / (h * h);
    stats.max_abs = std::max(stats.max_abs, std::abs(d2));
    // Concavity is only required on [0, inf); the stencil at x = 0 is
    // symmetric and vanishes under S1.
    stats.max_signed = std::max(stats.max_signed, d2);
  }
  return stats;
}

}  // namespace

SigmoidalFunction::SigmoidalFunction(std::string name, Eval eval, double decay_alpha,
                                     bool twice_differentiable)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      decay_alpha_(decay_alpha),
      twice_differentiable_(twice_differentiable) {
  if (!(decay_alpha_ > 0.0) || !std::isfinite(decay_alpha_)) {
    throw Error(ErrorCode::InvalidArgument, "decay_alpha must be a finite positive value");
  }
  if (!eval_) throw Error(ErrorCode::InvalidArgument, "sigmoidal needs an evaluator");
}

SigmoidalFunction make_logistic() {
  // Exponential decay beats every power law; alpha = 1 is a valid witness.
  return SigmoidalFunction("logistic", logistic, 1.0, true);
}

SigmoidalFunction make_tanh_sigmoidal() {
  // (1 + tanh x) / 2 == 1 / (1 + e^{-2x}); the second form keeps full
  // relative accuracy in the left tail where 1 + tanh x cancels.
  return SigmoidalFunction("tanh", [](double x) { return logistic(2.0 * x); }, 1.0, true);
}

SigmoidalFunction make_ramp_nonconforming() {
  return SigmoidalFunction(
      "ramp-nonconforming",
      [](double x) { return std::clamp(0.5 * (x + 1.0), 0.0, 1.0); }, 1.0, false);
}

SigmoidalFunction sigmoidal_by_name(const std::string& name) {
  if (name == "logistic") return make_logistic();
  if (name == "tanh") return make_tanh_sigmoidal();
  if (name == "ramp-nonconforming") return make_ramp_nonconforming();
  throw Error(ErrorCode::UnknownKernel, "unknown kernel '" + name + "'");
}

std::vector<std::string> sigmoidal_names() {
  return {"logistic", "tanh", "ramp-nonconforming"};
}

bool ValidationReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConditionCheck& c) { return c.passed; });
}

const ConditionCheck* ValidationReport::find(const std::string& name) const noexcept {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const ConditionCheck& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

ValidationReport validate_sigmoidal(const SigmoidalFunction& s, int r_max,
                                    int grid_resolution) {
  if (grid_resolution < 100) {
    throw Error(ErrorCode::InvalidArgument, "grid_resolution must be at least 100");
  }
  if (r_max < 1) throw Error(ErrorCode::InvalidArgument, "r_max must be positive");

  ValidationReport report;
  report.kernel = s.name();
  report.r_max = r_max;
  report.grid_resolution = grid_resolution;

  {
    const auto grid = uniform_grid(-50.0, 50.0, grid_resolution);
    double worst_drop = 0.0;
    double previous = s(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double current = s(grid[i]);
      worst_drop = std::max(worst_drop, previous - current);
      previous = current;
    }
    report.checks.push_back({"monotonicity", worst_drop <= 0.0, worst_drop,
                             format_metric("max_decrease", worst_drop)});
  }

  {
    const double left = std::abs(s(-50.0));
    const double right = std::abs(1.0 - s(50.0));
    const double worst = std::max(left, right);
    report.checks.push_back({"limits", worst < 1e-8, worst,
                             format_metric("max_limit_residual", worst)});
  }

  {
    double residual = 0.0;
    for (double x : uniform_grid(0.0, 50.0, grid_resolution)) {
      residual = std::max(residual, std::abs(s(x) + s(-x) - 1.0));
    }
    report.checks.push_back({"S1", residual <= 1e-12, residual,
                             format_metric("max_symmetry_residual", residual)});
  }

  {
    const auto coarse = second_differences(s, 0.0, 20.0, grid_resolution);
    const auto fine = second_differences(s, 0.0, 20.0, 4 * grid_resolution);
    const double growth = fine.max_abs / std::max(coarse.max_abs, 1e-12);
    const double max_second_difference = std::max(coarse.max_signed, fine.max_signed);
    const bool concave = max_second_difference <= 1e-10;
    const bool smooth = growth <= 1.5;
    std::ostringstream detail;
    detail << "max_second_difference=" << max_second_difference
           << " refinement_growth=" << growth
           << " declared_c2=" << (s.is_twice_differentiable() ? "true" : "false");
    report.checks.push_back({"S2", concave && smooth, growth, detail.str()});
  }

  {
    const double alpha = s.decay_alpha();
    const auto grid = uniform_grid(-50.0, -10.0, grid_resolution);
    double outer = 0.0;
    double inner = 0.0;
    bool finite = true;
    for (double x : grid) {
      const double weighted = std::abs(s(x)) * std::pow(std::abs(x), 1.0 + alpha);
      finite = finite && std::isfinite(weighted);
      double& bucket = x <= -30.0 ? outer : inner;
      bucket = std::max(bucket, weighted);
    }
    const bool bounded = finite && outer <= inner * (1.0 + 1e-9);
    std::ostringstream detail;
    detail << "outer_sup=" << outer << " inner_sup=" << inner;
    report.checks.push_back({"S3", bounded, std::max(outer, inner), detail.str()});
  }

  {
    double worst_gap = std::numeric_limits<double>::infinity();
    int worst_r = 1;
    for (int r = 1; r <= r_max; ++r) {
      const double gap = s(r + 2.0) - s(static_cast<double>(r));
      if (gap < worst_gap) {
        worst_gap = gap;
        worst_r = r;
      }
    }
    std::ostringstream detail;
    detail << "min_gap=" << worst_gap << " at_r=" << worst_r;
    report.checks.push_back({"technical", worst_gap > 0.0, worst_gap, detail.str()});
  }

  return report;
}

DensityFunction::DensityFunction(std::string name, Eval eval)
    : name_(std::move(name)), eval_(std::move(eval)) {}

DensityFunction::DensityFunction(const SigmoidalFunction& source)
    : name_(source.name()), source_(source) {
  // Under S1 phi is even, so evaluate on the left half-line where both
  // sigmoid values are small and the difference does not cancel.
  eval_ = [s = source](double x) {
    const double left = -std::abs(x);
    return 0.5 * (s(left + 1.0) - s(left - 1.0));
  };
}

DensityFunction DensityFunction::from_callable(std::string name, Eval eval) {
  if (!eval) throw Error(ErrorCode::InvalidArgument, "density needs an evaluator");
  return DensityFunction(std::move(name), std::move(eval));
}

DensityFunction density_of(const SigmoidalFunction& s) { return DensityFunction(s); }

TruncatedSum partition_of_unity_sum(const DensityFunction& phi, double x) {
  const auto center = static_cast<long long>(std::llround(x));
  auto term = [&](long long k) { return phi(x - static_cast<double>(k)); };
  const TruncatedSum up = outward_sum(center + 1, 1, term);
  const TruncatedSum down = outward_sum(center - 1, -1, term);
  return {term(center) + up.value + down.value, std::max(up.radius, down.radius)};
}

TruncatedSum tail_sum(const DensityFunction& phi, double x, double threshold) {
  auto term = [&](long long k) { return phi(x - static_cast<double>(k)); };
  // First integers strictly beyond x + threshold and x - threshold.
  auto first_above = static_cast<long long>(std::floor(x + threshold)) + 1;
  auto first_below = static_cast<long long>(std::ceil(x - threshold)) - 1;
  const TruncatedSum up = outward_sum(first_above, 1, term);
  const TruncatedSum down = outward_sum(first_below, -1, term);
  return {up.value + down.value, std::max(up.radius, down.radius)};
}

}  // namespace steklov
