#include "steklov/steklov_mean.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {
namespace {

constexpr auto kBinomials = [] {
  std::array<std::array<std::int64_t, kMaxSteklovOrder + 1>, kMaxSteklovOrder + 1> table{};
  for (int r = 0; r <= kMaxSteklovOrder; ++r) {
    table[r][0] = table[r][r] = 1;
    for (int m = 1; m < r; ++m) table[r][m] = table[r - 1][m - 1] + table[r - 1][m];
  }
  return table;
}();

// (-1)^{1-m} C(r, m)
std::int64_t signed_coefficient(int r, int m) {
  return (m % 2 == 1 ? 1 : -1) * binomial(r, m);
}

void check_domain(const TargetFunction& f, const SteklovConfig& cfg, double x) {
  const Interval& d = f.domain();
  const double slack = d.slack();
  const double right = x + cfg.r * cfg.h;
  if (!(x >= d.lo - slack && right <= d.hi + slack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Steklov window [" << x << ", " << right << "] leaves the domain [" << d.lo
        << ", " << d.hi << "] of '" << f.name() << "'";
    throw Error(ErrorCode::DomainViolation, msg.str());
  }
}

}  // namespace

void SteklovConfig::validate() const {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "Steklov order r must be >= 1");
  if (r > kMaxSteklovOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "Steklov order r must be <= " + std::to_string(kMaxSteklovOrder));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::InvalidArgument, "Steklov step h must be positive");
  }
}

std::int64_t binomial(int r, int m) {
  if (r < 0 || r > kMaxSteklovOrder || m < 0 || m > r) {
    throw Error(ErrorCode::InvalidArgument,
                "binomial(" + std::to_string(r) + ", " + std::to_string(m) + ") out of range");
  }
  return kBinomials[r][m];
}

double irwin_hall_pdf(int r, double u) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "Irwin-Hall order must be >= 1");
  if (!(u >= 0.0 && u <= r)) return 0.0;

  // p_k(v) = (v p_{k-1}(v) + (k - v) p_{k-1}(v - 1)) / (k - 1), p_1 = 1 on [0, 1).
  // Every term is non-negative, so there is no cancellation.
  std::vector<double> level(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    const double v = u - j;
    level[static_cast<std::size_t>(j)] = (v >= 0.0 && v < 1.0) ? 1.0 : 0.0;
  }
  for (int k = 2; k <= r; ++k) {
    for (int j = 0; j <= r - k; ++j) {
      const double v = u - j;
      const auto s = static_cast<std::size_t>(j);
      level[s] = (v * level[s] + (k - v) * level[s + 1]) / (k - 1);
    }
  }
  return level[0];
}

double alternating_binomial_sum(int r) {
  SteklovConfig{r, 1.0}.validate();
  std::int64_t sum = 0;
  for (int m = 1; m <= r; ++m) sum += signed_coefficient(r, m);
  return static_cast<double>(sum);
}

double weighted_binomial_sum(int r) {
  SteklovConfig{r, 1.0}.validate();
  std::int64_t sum = 0;
  for (int m = 1; m <= r; ++m) sum += signed_coefficient(r, m) * m;
  return static_cast<double>(sum) / r;
}

double steklov_mean(const TargetFunction& f, const SteklovConfig& cfg, double x,
                    const QuadratureRule& rule) {
  cfg.validate();
  check_domain(f, cfg, x);

  const int r = cfg.r;
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();

  // Weighted pdf values on the unsplit pieces, shared by every m.
  std::vector<double> u_nodes;
  std::vector<double> pdf_weights;
  u_nodes.reserve(static_cast<std::size_t>(r) * nodes.size());
  pdf_weights.reserve(u_nodes.capacity());
  for (int j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double u = j + nodes[i];
      u_nodes.push_back(u);
      pdf_weights.push_back(weights[i] * irwin_hall_pdf(r, u));
    }
  }

  double total = 0.0;
  for (int m = 1; m <= r; ++m) {
    const double scale = m * cfg.h / r;
    auto integrand = [&](double u) { return f(x + scale * u) * irwin_hall_pdf(r, u); };

    double expectation = 0.0;
    const auto kinks = f.breakpoints_in(x, x + m * cfg.h);
    if (kinks.empty()) {
      for (std::size_t i = 0; i < u_nodes.size(); ++i) {
        expectation += pdf_weights[i] * f(x + scale * u_nodes[i]);
      }
    } else {
      std::size_t next = 0;
      for (int j = 0; j < r; ++j) {
        double lo = j;
        while (next < kinks.size()) {
          const double cut = (kinks[next] - x) / scale;
          if (cut >= j + 1) break;
          if (cut > lo) {
            expectation += rule.integrate(lo, cut, integrand);
            lo = cut;
          }
          ++next;
        }
        expectation += rule.integrate(lo, j + 1.0, integrand);
      }
    }
    total += static_cast<double>(signed_coefficient(r, m)) * expectation;
  }
  return total;
}

double steklov_mean_oracle(const TargetFunction& f, const SteklovConfig& cfg, double x,
                           int nodes_per_dim) {
  cfg.validate();
  if (cfg.r > kMaxOracleOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "tensor-product oracle supports r <= " + std::to_string(kMaxOracleOrder));
  }
  check_domain(f, cfg, x);

  const int r = cfg.r;
  const double h = cfg.h;
  const QuadratureRule rule = QuadratureRule::gauss_legendre(nodes_per_dim);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  const std::size_t per_dim = nodes.size();

  std::vector<std::size_t> index(static_cast<std::size_t>(r), 0);
  double total = 0.0;
  while (true) {
    double t_sum = 0.0;
    double weight = 1.0;
    for (std::size_t d = 0; d < index.size(); ++d) {
      t_sum += h * nodes[index[d]];
      weight *= h * weights[index[d]];
    }
    double integrand = 0.0;
    for (int m = 1; m <= r; ++m) {
      const double sign = (r - m + 1) % 2 == 0 ? 1.0 : -1.0;
      integrand += sign * static_cast<double>(binomial(r, m)) *
                   f(x + static_cast<double>(m) / r * t_sum);
    }
    total += weight * integrand;

    std::size_t d = 0;
    while (d < index.size() && ++index[d] == per_dim) index[d++] = 0;
    if (d == index.size()) break;
  }
  return std::pow(-h, -r) * total;
}

}  // namespace steklov
