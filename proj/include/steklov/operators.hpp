#pragma once

#include <span>
#include <vector>

#include "steklov/kernels.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/target.hpp"

namespace steklov {

struct IndexRange {
  long long k_min = 0;
  long long k_max = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(k_max - k_min + 1); }
};

/// k_min = ceil(n a), k_max = floor(n b) - r. Products within 1e-9 (relative)
/// of an integer are snapped to it first, so 10 * 0.3 counts as 3.
/// Throws InvalidRange when k_min > k_max.
IndexRange index_range(int n, int r, const Interval& interval);

/// (n, r, [a, b], kernel) for the Steklov operator. Construction enforces
/// n >= 1, r in [1, 20], and a non-empty index range.
class OperatorConfig {
 public:
  OperatorConfig(int n, int r, Interval interval, DensityFunction kernel);
  OperatorConfig(const TargetFunction& f, int n, int r, DensityFunction kernel);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  const Interval& interval() const noexcept { return interval_; }
  const DensityFunction& kernel() const noexcept { return kernel_; }
  IndexRange range() const noexcept { return range_; }

 private:
  int n_;
  int r_;
  Interval interval_;
  DensityFunction kernel_;
  IndexRange range_;
};

/// sum_k f(k/n) phi(nx - k) / sum_k phi(nx - k), k = ceil(na)..floor(nb).
double classical_operator(const TargetFunction& f, int n, const DensityFunction& kernel,
                          double x);

/// F_n^r bound to one target. The Steklov means f_{r,1/n}(k/n) are computed
/// once at construction; evaluation is then a pair of kernel sums per x.
class SteklovOperator {
 public:
  SteklovOperator(const TargetFunction& f, OperatorConfig cfg,
                  const QuadratureRule& rule = default_rule());

  double operator()(double x) const;

  const OperatorConfig& config() const noexcept { return cfg_; }
  std::span<const double> steklov_means() const noexcept { return means_; }

  /// sum_k phi(nx - k) over the operator's index range.
  double denominator(double x) const;

 private:
  OperatorConfig cfg_;
  std::vector<double> means_;
  double denominator_floor_;
};

double steklov_operator(const TargetFunction& f, const OperatorConfig& cfg, double x);

/// grid_points uniformly spaced points of [lo, hi], endpoints included exactly.
std::vector<double> uniform_points(const Interval& interval, int grid_points);

struct GridValue {
  double x;
  double value;
};

/// F_n^r f on a uniform grid of [a, b]. Throws InvalidArgument if grid_points < 2.
std::vector<GridValue> evaluate_on_grid(const TargetFunction& f, const OperatorConfig& cfg,
                                        int grid_points);

struct SupNormBoundCheck {
  double measured_sup = 0.0;
  double bound = 0.0;
  double f_sup_norm = 0.0;
  bool pass = false;
};

/// max |F_n^r f| on the grid against (2^r - 1) ||f|| / phi(r + 1).
SupNormBoundCheck sup_norm_bound_check(const TargetFunction& f, const OperatorConfig& cfg,
                                       int grid_points);

}  // namespace steklov
