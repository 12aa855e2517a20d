#pragma once

#include <cstdint>

#include "steklov/quadrature.hpp"
#include "steklov/target.hpp"

namespace steklov {

/// Largest order for which binomial coefficients are kept in exact integer
/// arithmetic.
inline constexpr int kMaxSteklovOrder = 20;
/// Largest order accepted by the tensor-product oracle.
inline constexpr int kMaxOracleOrder = 4;

struct SteklovConfig {
  int r = 1;
  double h = 1.0;

  /// Throws InvalidArgument for r < 1 or h <= 0, OrderTooLarge for r > 20.
  void validate() const;
};

/// C(r, m) for 0 <= m <= r <= 20.
std::int64_t binomial(int r, int m);

/// Density of the sum of r independent uniforms on [0, 1] (Irwin-Hall law).
/// Zero outside [0, r].
double irwin_hall_pdf(int r, double u);

/// sum_{m=1}^{r} (-1)^{1-m} C(r, m); equals 1 for every r >= 1.
double alternating_binomial_sum(int r);

/// sum_{m=1}^{r} (-1)^{1-m} C(r, m) m / r; equals 1 for r = 1 and 0 otherwise.
double weighted_binomial_sum(int r);

/// Steklov mean of order r and step h at x:
///
///   sum_{m=1}^{r} (-1)^{1-m} C(r, m) * E[f(x + (m h / r) S)],  S ~ Irwin-Hall(r)
///
/// which is the r-fold mean over [0, h]^r with the integrand depending on
/// t_1 + ... + t_r only. The expectation is integrated piecewise on [j, j+1]
/// with `rule`, further split at breakpoints of f.
///
/// Throws DomainViolation unless [x, x + r h] lies in f's domain.
double steklov_mean(const TargetFunction& f, const SteklovConfig& cfg, double x,
                    const QuadratureRule& rule = default_rule());

/// The same quantity as the literal r-fold integral
///   (-h)^{-r} int_{[0,h]^r} sum_m (-1)^{r-m+1} C(r,m) f(x + (m/r)(t_1+...+t_r)) dt
/// with a tensor-product Gauss-Legendre rule. Cost grows as nodes_per_dim^r.
///
/// Throws OrderTooLarge for r > 4 and DomainViolation as steklov_mean.
double steklov_mean_oracle(const TargetFunction& f, const SteklovConfig& cfg, double x,
                           int nodes_per_dim);

}  // namespace steklov
