#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steklov/kernels.hpp"
#include "steklov/moments.hpp"
#include "steklov/operators.hpp"
#include "steklov/target.hpp"

namespace steklov {

struct ModulusEstimate {
  /// The value callers should use: L * delta capped by the certified grid
  /// upper bound when L is known, otherwise the grid lower estimate.
  double value = 0.0;
  /// max |f(t) - f(x)| over the probe pairs; never exceeds the true modulus.
  double grid_lower = 0.0;
  /// True when no Lipschitz constant was available and value is a grid
  /// lower estimate.
  bool estimated = false;
};

/// omega(f; delta) = sup_{|t - x| < delta} |f(t) - f(x)| on f's domain.
///
/// Probes `probes` equally spaced base points x and 32 offsets
/// t = x +- delta * i / 16 (the outermost pulled strictly inside delta),
/// clamped to [a, b]. With a Lipschitz constant L the grid maximum is lifted
/// to an upper bound grid_lower + L (spacing + delta / 16) and the result is
/// min(L delta, that bound).
///
/// Throws InvalidArgument if delta <= 0 or probes < 1000.
ModulusEstimate modulus_of_continuity(const TargetFunction& f, double delta,
                                      int probes = 1000);

struct TheoreticalBound {
  double value = 0.0;
  double omega = 0.0;
  bool omega_estimated = false;
  double kernel_floor = 0.0;  // phi(r + 1)
  double first_moment = 0.0;  // M_1
};

/// omega(f; 1/n) / phi(r + 1) * (1 + M1). Uses omega = L / n when f carries a
/// Lipschitz constant. Throws OrderOutOfScope for r = 1.
TheoreticalBound theoretical_bound(const TargetFunction& f, const OperatorConfig& cfg,
                                   double first_moment);

/// max |F_n^r f - f| over grid_points uniform points (endpoints included).
double measure_sup_error(const TargetFunction& f, const OperatorConfig& cfg,
                         int grid_points = 1001);

struct ConvergenceRow {
  int n = 0;
  std::optional<double> sup_error;
  std::optional<double> bound;
  std::optional<double> empirical_order;
  std::optional<std::string> error;  // set when this n is rejected (InvalidRange)
};

struct ConvergenceReport {
  std::string kernel;
  std::string function;
  int r = 0;
  int grid_points = 0;
  bool omega_estimated = false;
  std::optional<double> first_moment;
  std::vector<ConvergenceRow> rows;

  /// Header `n,sup_error,bound,empirical_order`; absent values are empty.
  std::string to_csv() const;
  /// Rows where sup_error > bound.
  std::vector<int> bound_violations() const;
};

/// Sup error (and for r >= 2 the error bound) for each n. An empirical order
/// log2(e_{i-1} / e_i) is filled in only where n_i = 2 n_{i-1}.
/// Throws InvalidArgument if n_list is empty or not strictly ascending.
ConvergenceReport convergence_study(const TargetFunction& f, const DensityFunction& kernel,
                                    int r, const std::vector<int>& n_list,
                                    int grid_points = 1001);

}  // namespace steklov
