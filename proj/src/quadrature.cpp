#include "steklov/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "steklov/error.hpp"

namespace steklov {

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

QuadratureRule QuadratureRule::gauss_legendre(int points) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "quadrature needs at least one node");

  const auto n = static_cast<std::size_t>(points);
  std::vector<double> nodes(n);
  std::vector<double> weights(n);

  // Newton iteration on P_n from the Chebyshev-like initial guess; roots are
  // symmetric, so only the upper half is solved for.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (points + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double p_current = 1.0;
      double p_previous = 0.0;
      for (int j = 1; j <= points; ++j) {
        const double p_older = p_previous;
        p_previous = p_current;
        p_current = ((2.0 * j - 1.0) * z * p_previous - (j - 1.0) * p_older) / j;
      }
      derivative = points * (z * p_current - p_previous) / (z * z - 1.0);
      const double step = p_current / derivative;
      z -= step;
      if (std::abs(step) <= 1e-16) break;
    }
    // Map the root pair +-z from [-1, 1] to [0, 1].
    const double weight = 1.0 / ((1.0 - z * z) * derivative * derivative);
    nodes[i] = 0.5 * (1.0 - z);
    nodes[n - 1 - i] = 0.5 * (1.0 + z);
    weights[i] = weights[n - 1 - i] = weight;
  }
  return QuadratureRule(std::move(nodes), std::move(weights));
}

const QuadratureRule& default_rule() {
  static const QuadratureRule rule = QuadratureRule::gauss_legendre(32);
  return rule;
}

}  // namespace steklov
