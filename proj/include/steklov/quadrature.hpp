#pragma once

#include <span>
#include <vector>

namespace steklov {

/// Gauss-Legendre nodes and weights on the reference interval [0, 1].
class QuadratureRule {
 public:
  /// Throws InvalidArgument if points < 1.
  static QuadratureRule gauss_legendre(int points);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  int points_per_piece() const noexcept { return static_cast<int>(nodes_.size()); }

  /// Integral of fn over [lo, hi] with the rule mapped affinely.
  template <typename Fn>
  double integrate(double lo, double hi, Fn&& fn) const {
    const double width = hi - lo;
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * fn(lo + width * nodes_[i]);
    }
    return sum * width;
  }

 private:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// 32 points per unit piece.
const QuadratureRule& default_rule();

}  // namespace steklov
