#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steklov/target.hpp"

namespace steklov {

enum class Subcommand {
  ValidateKernel,
  Moments,
  SteklovMean,
  Approximate,
  Convergence,
  BoundCheck,
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::Approximate;
  std::string kernel = "logistic";
  /// Catalog name, or a path to a CSV file with header `x,y`.
  std::string function = "sin_pi";

  int n = 10;
  std::vector<int> n_list{10, 20, 40, 80, 160};
  int r = 2;
  int grid = 1001;

  // validate-kernel
  int r_max = 5;
  int grid_resolution = 1000;

  // moments
  int beta = 1;
  double tol = 1e-12;
  int moment_grid = 4097;
  std::optional<double> moment_u;
  std::optional<int> moment_n;

  // steklov-mean
  double h = 0.01;
  double x = 0.0;
  int quadrature_points = 32;
  int oracle_nodes = 16;

  // bound-check: multiplies every bound before comparing (forced-failure path).
  double bound_scale = 1.0;

  std::string out;
  /// Adds a UTC timestamp to metadata JSON. Data files never carry one.
  bool stamp = false;
};

/// Catalog name or CSV path to a target function.
TargetFunction resolve_function(const std::string& spec);

/// Executes one subcommand. Writes data to config.out (or `out` when empty),
/// metadata/diagnostics JSON to `out`, and JSON errors to `err`.
/// Returns 0 on success, 2 on a failed validation or bound check, 1 on a
/// usage or precondition error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace steklov
