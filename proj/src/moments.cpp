#include "steklov/moments.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "steklov/error.hpp"
#include "steklov/parallel.hpp"

namespace steklov {
namespace {

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

void check_beta(int beta) {
  if (beta < 0) throw Error(ErrorCode::InvalidArgument, "moment order must be non-negative");
}

}  // namespace

double truncated_algebraic_moment(const DensityFunction& phi, const MomentQuery& q) {
  check_beta(q.beta);
  if (q.n < 1) throw Error(ErrorCode::InvalidArgument, "truncation radius must be positive");
  double sum = 0.0;
  for (int k = -q.n; k <= q.n; ++k) {
    const double d = q.u - k;
    sum += phi(d) * int_pow(d, q.beta);
  }
  return sum;
}

double absolute_moment_sum(const DensityFunction& phi, int beta, double u,
                           const AbsoluteMomentOptions& options, long long* radius_used,
                           double* last_increment) {
  check_beta(beta);
  auto term = [&](long long k) {
    const double d = u - static_cast<double>(k);
    return std::abs(phi(d)) * int_pow(std::abs(d), beta);
  };

  long long radius = std::max<long long>(options.initial_radius, 1);
  double sum = 0.0;
  for (long long k = -radius; k <= radius + 1; ++k) sum += term(k);

  // Window is [-radius, radius + 1]; u lies in [0, 1].
  for (int doubling = 0; doubling < options.max_doublings; ++doubling) {
    double increment = 0.0;
    for (long long k = radius + 1; k <= 2 * radius; ++k) {
      increment += term(-k) + term(k + 1);
    }
    sum += increment;
    radius *= 2;
    if (increment < options.tol) {
      if (radius_used != nullptr) *radius_used = radius;
      if (last_increment != nullptr) *last_increment = increment;
      return sum;
    }
  }
  throw Error(ErrorCode::NonConvergentTail,
              "absolute moment of order " + std::to_string(beta) + " for kernel '" +
                  phi.name() + "' did not converge after " +
                  std::to_string(options.max_doublings) + " radius doublings");
}

AbsoluteMoment discrete_absolute_moment(const DensityFunction& phi, int beta,
                                        const AbsoluteMomentOptions& options) {
  check_beta(beta);
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  if (options.grid_points < 1001) {
    throw Error(ErrorCode::InvalidArgument, "u-grid needs at least 1001 points");
  }

  const auto points = static_cast<std::size_t>(options.grid_points);
  const double spacing = 1.0 / static_cast<double>(points - 1);
  std::vector<double> sums(points);
  std::vector<long long> radii(points);
  std::vector<double> increments(points);

  // A slowly decaying kernel fails identically at every u; probe once so the
  // failure costs a single sweep.
  absolute_moment_sum(phi, beta, 0.0, options);

  parallel_for(points, [&](std::size_t i) {
    const double u = i + 1 == points ? 1.0 : spacing * static_cast<double>(i);
    sums[i] = absolute_moment_sum(phi, beta, u, options, &radii[i], &increments[i]);
  });

  AbsoluteMoment result;
  result.grid_spacing = spacing;
  result.grid_points = options.grid_points;
  result.value = -1.0;
  for (std::size_t i = 0; i < points; ++i) {
    if (sums[i] > result.value) {
      result.value = sums[i];
      result.argmax_u = i + 1 == points ? 1.0 : spacing * static_cast<double>(i);
    }
    result.max_radius = std::max(result.max_radius, radii[i]);
    result.max_tail_increment = std::max(result.max_tail_increment, increments[i]);
  }
  return result;
}

}  // namespace steklov
