// Command-line front end for the Steklov neural network operator library.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steklov/run.hpp"

namespace {

void add_kernel(CLI::App* cmd, steklov::RunConfig& config) {
  cmd->add_option("--kernel", config.kernel, "logistic | tanh | ramp-nonconforming")
      ->capture_default_str();
}

void add_function(CLI::App* cmd, steklov::RunConfig& config) {
  cmd->add_option("--function", config.function,
                  "const1 | identity | sin_pi | abs_shift | square | step_half | <file.csv>")
      ->capture_default_str();
}

void add_study_options(CLI::App* cmd, steklov::RunConfig& config) {
  add_kernel(cmd, config);
  add_function(cmd, config);
  cmd->add_option("--r", config.r, "Steklov order")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--n", config.n_list, "ascending comma-separated n values")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--grid", config.grid, "error grid points")->check(CLI::Range(100, 100000000))
      ->capture_default_str();
  cmd->add_option("--out", config.out, "CSV report path");
  cmd->add_flag("--stamp", config.stamp, "add a timestamp to the metadata JSON");
}

}  // namespace

int main(int argc, char** argv) {
  steklov::RunConfig config;
  CLI::App app{"Steklov neural network operators: construction, evaluation, validation"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate-kernel", "grid-check the sigmoidal conditions");
  add_kernel(validate, config);
  validate->add_option("--r-max", config.r_max)->check(CLI::PositiveNumber)->capture_default_str();
  validate->add_option("--grid-resolution", config.grid_resolution)
      ->check(CLI::Range(100, 100000000))
      ->capture_default_str();

  auto* moments = app.add_subcommand("moments", "discrete absolute moment M_beta of the density");
  add_kernel(moments, config);
  moments->add_option("--beta", config.beta)->check(CLI::NonNegativeNumber)->capture_default_str();
  moments->add_option("--tol", config.tol)->check(CLI::PositiveNumber)->capture_default_str();
  moments->add_option("--u-grid", config.moment_grid)->check(CLI::Range(1001, 100000000))
      ->capture_default_str();
  moments->add_option("--u", config.moment_u, "also report the truncated algebraic moment at u");
  moments->add_option("--truncation", config.moment_n, "radius n of the truncated moment")
      ->check(CLI::PositiveNumber);

  auto* mean = app.add_subcommand("steklov-mean", "Steklov mean of a target at one point");
  mean->set_help_flag("--help", "Print this help message and exit");
  add_function(mean, config);
  mean->add_option("--r", config.r)->check(CLI::PositiveNumber)->capture_default_str();
  mean->add_option("--h", config.h)->check(CLI::PositiveNumber)->capture_default_str();
  mean->add_option("--x", config.x)->capture_default_str();
  mean->add_option("--points", config.quadrature_points, "Gauss-Legendre points per piece")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mean->add_option("--oracle-nodes", config.oracle_nodes)->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* approximate = app.add_subcommand("approximate", "evaluate F_n^r f on a grid");
  add_kernel(approximate, config);
  add_function(approximate, config);
  approximate->add_option("--n", config.n)->check(CLI::PositiveNumber)->capture_default_str();
  approximate->add_option("--r", config.r)->check(CLI::PositiveNumber)->capture_default_str();
  approximate->add_option("--grid", config.grid)->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  approximate->add_option("--out", config.out, "CSV path (x,approx,exact,abs_error)");
  approximate->add_flag("--stamp", config.stamp);

  auto* convergence = app.add_subcommand("convergence", "sup error and bound across n");
  add_study_options(convergence, config);

  auto* bound_check = app.add_subcommand("bound-check", "exit 2 if any error exceeds its bound");
  add_study_options(bound_check, config);
  bound_check->add_option("--bound-scale", config.bound_scale, "multiply bounds before checking")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << nlohmann::json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return steklov::kExitUsage;
  }

  if (validate->parsed()) config.subcommand = steklov::Subcommand::ValidateKernel;
  if (moments->parsed()) config.subcommand = steklov::Subcommand::Moments;
  if (mean->parsed()) config.subcommand = steklov::Subcommand::SteklovMean;
  if (approximate->parsed()) config.subcommand = steklov::Subcommand::Approximate;
  if (convergence->parsed()) config.subcommand = steklov::Subcommand::Convergence;
  if (bound_check->parsed()) config.subcommand = steklov::Subcommand::BoundCheck;

  return steklov::run(config, std::cout, std::cerr);
}
