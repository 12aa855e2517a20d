#pragma once

#include "steklov/kernels.hpp"

namespace steklov {

struct MomentQuery {
  int beta = 0;
  double u = 0.0;
  int n = 1;
};

/// m_beta^n(phi, u) = sum_{k=-n}^{n} phi(u - k) (u - k)^beta, with signed powers.
/// Throws InvalidArgument if beta < 0 or n < 1.
double truncated_algebraic_moment(const DensityFunction& phi, const MomentQuery& q);

struct AbsoluteMomentOptions {
  double tol = 1e-12;
  int grid_points = 4097;
  long long initial_radius = 8;
  int max_doublings = 20;
};

/// Result of the discrete absolute moment. The sup over shifts is a grid
/// maximum and therefore a lower estimate; grid_spacing says how coarse.
struct AbsoluteMoment {
  double value = 0.0;
  double argmax_u = 0.0;
  double grid_spacing = 0.0;
  int grid_points = 0;
  long long max_radius = 0;
  double max_tail_increment = 0.0;
};

/// Inner sum sum_k |phi(u - k)| |u - k|^beta, truncated by doubling the
/// radius until an increment falls below tol. Throws NonConvergentTail.
double absolute_moment_sum(const DensityFunction& phi, int beta, double u,
                           const AbsoluteMomentOptions& options,
                           long long* radius_used = nullptr,
                           double* last_increment = nullptr);

/// M_beta(phi) = sup_u sum_k |phi(u - k)| |u - k|^beta. The summand is
/// 1-periodic in u, so the sup is taken over a uniform grid on [0, 1].
AbsoluteMoment discrete_absolute_moment(const DensityFunction& phi, int beta,
                                        const AbsoluteMomentOptions& options = {});

}  // namespace steklov
