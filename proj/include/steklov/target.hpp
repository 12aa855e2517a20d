#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace steklov {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const noexcept { return hi - lo; }
  /// Absolute tolerance absorbing rounding in expressions like k/n + r/n.
  double slack() const noexcept;
};

enum class TargetKind { Catalog, Sampled };

/// A bounded function on a closed interval. Evaluating outside the interval
/// (beyond rounding slack) throws DomainViolation; there is no extrapolation.
class TargetFunction {
 public:
  using Eval = std::function<double(double)>;

  /// breakpoints lists interior points where the function is not smooth; the
  /// Steklov quadrature splits its pieces there.
  static TargetFunction analytic(std::string name, Interval domain, Eval eval,
                                 std::optional<double> lipschitz_constant = std::nullopt,
                                 std::optional<double> sup_norm_hint = std::nullopt,
                                 std::vector<double> breakpoints = {});

  /// Piecewise-linear interpolant through (xs[i], ys[i]). Lipschitz constant is
  /// the steepest segment slope. Throws TooFewPoints, NonMonotoneAbscissae,
  /// or InvalidArgument for non-finite data.
  static TargetFunction sampled(std::string name, std::vector<double> xs,
                                std::vector<double> ys);

  double operator()(double x) const;

  const std::string& name() const noexcept { return name_; }
  const Interval& domain() const noexcept { return domain_; }
  TargetKind kind() const noexcept { return kind_; }
  const std::optional<double>& lipschitz_constant() const noexcept { return lipschitz_; }
  const std::optional<double>& sup_norm_hint() const noexcept { return sup_norm_hint_; }

  /// Breakpoints strictly inside (lo, hi), ascending.
  std::vector<double> breakpoints_in(double lo, double hi) const;

  const std::vector<double>& abscissae() const noexcept { return xs_; }
  const std::vector<double>& ordinates() const noexcept { return ys_; }

 private:
  TargetFunction() = default;

  std::string name_;
  Interval domain_;
  TargetKind kind_ = TargetKind::Catalog;
  Eval eval_;
  std::optional<double> lipschitz_;
  std::optional<double> sup_norm_hint_;
  std::vector<double> breakpoints_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Sup norm: the hint when present, otherwise the max of |f| over 10^4
/// uniformly spaced points.
double sup_norm(const TargetFunction& f);

}  // namespace steklov
