#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace steklov {

/// A non-decreasing activation with limits 0 at -inf and 1 at +inf.
/// decay_alpha is the exponent of the |x|^{-1-alpha} decay at -inf.
class SigmoidalFunction {
 public:
  using Eval = std::function<double(double)>;

  SigmoidalFunction(std::string name, Eval eval, double decay_alpha,
                    bool twice_differentiable);

  double operator()(double x) const { return eval_(x); }

  const std::string& name() const noexcept { return name_; }
  double decay_alpha() const noexcept { return decay_alpha_; }
  bool is_twice_differentiable() const noexcept { return twice_differentiable_; }

 private:
  std::string name_;
  Eval eval_;
  double decay_alpha_;
  bool twice_differentiable_;
};

SigmoidalFunction make_logistic();
SigmoidalFunction make_tanh_sigmoidal();
/// Piecewise-linear ramp clamped at x = -1 and x = 1. Satisfies the limits
/// and the odd symmetry but is not C^2, so validation rejects it.
SigmoidalFunction make_ramp_nonconforming();

/// Catalog lookup: "logistic", "tanh", "ramp-nonconforming".
SigmoidalFunction sigmoidal_by_name(const std::string& name);
std::vector<std::string> sigmoidal_names();

struct ConditionCheck {
  std::string name;
  bool passed = false;
  double metric = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::string kernel;
  int r_max = 0;
  int grid_resolution = 0;
  std::vector<ConditionCheck> checks;

  bool all_passed() const noexcept;
  const ConditionCheck* find(const std::string& name) const noexcept;
};

/// Grid certification of the sigmoidal conditions. Nothing here is a proof:
/// every check samples the function on a documented grid.
///
///  monotonicity  non-decreasing on grid_resolution+1 points of [-50, 50]
///  limits        |s(-50)| and |1 - s(50)| below 1e-8
///  S1            max |s(x) + s(-x) - 1| on [0, 50] below 1e-12
///  S2            second differences on [0, 20] are <= 1e-10 (concavity) and
///                their max magnitude grows by at most 1.5x under 4x grid
///                refinement; a corner makes it grow like 1/h
///  S3            |s(x)| |x|^{1+alpha} on [-50, -10]: the sup over the outer
///                half does not exceed the sup over the inner half
///  technical     s(r+2) > s(r) for r = 1..r_max
///
/// Throws InvalidArgument if grid_resolution < 100 or r_max < 1.
ValidationReport validate_sigmoidal(const SigmoidalFunction& s, int r_max,
                                    int grid_resolution);

/// phi(x) = (s(x+1) - s(x-1)) / 2, or an arbitrary kernel for fixtures.
class DensityFunction {
 public:
  using Eval = std::function<double(double)>;

  explicit DensityFunction(const SigmoidalFunction& source);

  /// Wraps an arbitrary non-negative kernel (used for divergence fixtures).
  static DensityFunction from_callable(std::string name, Eval eval);

  double operator()(double x) const { return eval_(x); }

  const std::string& name() const noexcept { return name_; }
  const std::optional<SigmoidalFunction>& source() const noexcept { return source_; }

 private:
  DensityFunction(std::string name, Eval eval);

  std::string name_;
  std::optional<SigmoidalFunction> source_;
  Eval eval_;
};

DensityFunction density_of(const SigmoidalFunction& s);

struct TruncatedSum {
  double value = 0.0;
  long long radius = 0;
};

/// sum_k phi(x - k) over all integers, truncated at the radius K (around the
/// nearest integer to x) where doubling K changes the partial sum by < 1e-14.
/// Throws NonConvergentTail if 20 doublings do not get there.
TruncatedSum partition_of_unity_sum(const DensityFunction& phi, double x);

/// sum of phi(x - k) over integers k with |x - k| > threshold, truncated the
/// same way.
TruncatedSum tail_sum(const DensityFunction& phi, double x, double threshold);

}  // namespace steklov
