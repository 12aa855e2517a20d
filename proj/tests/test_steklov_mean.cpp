#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "steklov/catalog.hpp"
#include "steklov/error.hpp"
#include "steklov/steklov_mean.hpp"

using namespace steklov;

namespace {

TargetFunction sine_on(double lo, double hi) {
  return TargetFunction::analytic("sin", {lo, hi}, [](double x) { return std::sin(x); }, 1.0);
}

TargetFunction identity_on(double lo, double hi) {
  return TargetFunction::analytic("id", {lo, hi}, [](double x) { return x; }, 1.0);
}

TargetFunction constant_on(double lo, double hi, double c) {
  return TargetFunction::analytic("c", {lo, hi}, [c](double) { return c; }, 0.0);
}

}  // namespace

TEST_CASE("Gauss-Legendre rule on [0, 1]") {
  for (int points : {1, 2, 5, 32, 50, 200}) {
    const auto rule = QuadratureRule::gauss_legendre(points);
    double total = 0.0;
    for (double w : rule.weights()) {
      CHECK(w > 0.0);
      total += w;
    }
    CHECK(std::abs(total - 1.0) < 1e-14);
    for (std::size_t i = 1; i < rule.nodes().size(); ++i) {
      CHECK(rule.nodes()[i] > rule.nodes()[i - 1]);
    }
    // exact for x^(2p-1)
    const int degree = std::min(2 * points - 1, 41);
    CHECK(rule.integrate(0.0, 1.0, [&](double x) { return std::pow(x, degree); }) ==
          doctest::Approx(1.0 / (degree + 1)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(QuadratureRule::gauss_legendre(0), Error);
}

TEST_CASE("Irwin-Hall density") {
  CHECK(irwin_hall_pdf(1, 0.5) == 1.0);
  CHECK(irwin_hall_pdf(2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(irwin_hall_pdf(3, 1.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(irwin_hall_pdf(3, -0.1) == 0.0);
  CHECK(irwin_hall_pdf(3, 3.1) == 0.0);

  // Conditional Monte Carlo: 10^7 samples, standard error <= 1.6e-4.
  CHECK(std::abs(oracle::irwin_hall_monte_carlo(2, 1.0, 10'000'000, 1) - 1.0) < 1e-3);
  CHECK(std::abs(oracle::irwin_hall_monte_carlo(3, 1.5, 10'000'000, 2) - 0.75) < 1e-3);
}

TEST_CASE("Irwin-Hall density matches the alternating closed form") {
  std::mt19937_64 rng(3);
  for (int r = 1; r <= 12; ++r) {
    std::uniform_real_distribution<double> dist(0.0, r);
    for (int i = 0; i < 40; ++i) {
      const double u = dist(rng);
      CHECK(irwin_hall_pdf(r, u) ==
            doctest::Approx(oracle::irwin_hall_closed_form(r, u)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Irwin-Hall density integrates to one") {
  const auto& rule = default_rule();
  for (int r = 1; r <= 20; ++r) {
    double total = 0.0;
    for (int j = 0; j < r; ++j) {
      total += rule.integrate(j, j + 1.0, [&](double u) { return irwin_hall_pdf(r, u); });
    }
    CAPTURE(r);
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("binomial sums") {
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(7, 0) == 1);
  CHECK_THROWS_AS(binomial(21, 3), Error);
  for (int r : {1, 2, 7}) CHECK(alternating_binomial_sum(r) == 1.0);
  CHECK(weighted_binomial_sum(1) == 1.0);
  CHECK(weighted_binomial_sum(2) == 0.0);
  CHECK(std::abs(weighted_binomial_sum(6)) < 1e-14);
  CHECK_THROWS_AS(alternating_binomial_sum(21), Error);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS((SteklovConfig{0, 0.1}.validate()), Error);
  CHECK_THROWS_AS((SteklovConfig{2, 0.0}.validate()), Error);
  try {
    SteklovConfig{21, 0.1}.validate();
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}

TEST_CASE("Steklov mean of simple functions") {
  const auto c = constant_on(-1.0, 2.0, 3.25);
  for (int r = 1; r <= 5; ++r) {
    CHECK(std::abs(steklov_mean(c, {r, 0.1}, 0.2) - 3.25) < 1e-13);
  }

  const auto id = identity_on(0.0, 1.0);
  const double h = 0.03;
  const double x = 0.41;
  // (1/h) int_0^h (x + t) dt = x + h/2
  CHECK(steklov_mean(id, {1, h}, x) == doctest::Approx(x + h / 2).epsilon(1e-15));
  // 2 E[x + S h/2] - E[x + S h] with E[S] = 1
  CHECK(std::abs(steklov_mean(id, {2, h}, x) - x) < 1e-12);
  for (int r : {2, 3, 4}) CHECK(std::abs(steklov_mean(id, {r, h}, x) - x) < 1e-12);
}

TEST_CASE("order one is the Kantorovich mean") {
  const int n = 40;
  const auto f = sine_on(0.0, 2.0);
  for (int k : {0, 7, 79}) {
    const double node = static_cast<double>(k) / n;
    // n int_0^{1/n} sin(node + t) dt = n (cos(node) - cos(node + 1/n))
    const double exact = n * (std::cos(node) - std::cos(node + 1.0 / n));
    CHECK(steklov_mean(f, {1, 1.0 / n}, node) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("collapsed mean agrees with the tensor-product oracle") {
  const auto f = sine_on(-2.0, 2.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xs(-1.5, 1.0);
  std::uniform_real_distribution<double> hs(0.001, 0.2);
  for (int r = 1; r <= 3; ++r) {
    for (int i = 0; i < 30; ++i) {
      const SteklovConfig cfg{r, hs(rng)};
      const double x = xs(rng);
      CHECK(std::abs(steklov_mean(f, cfg, x) - steklov_mean_oracle(f, cfg, x, 12)) < 1e-10);
    }
  }
  CHECK(std::abs(steklov_mean(f, {3, 0.01}, 0.3) - steklov_mean_oracle(f, {3, 0.01}, 0.3, 12)) <
        1e-10);
}

TEST_CASE("oracle constant reproduction and limits") {
  const auto c = constant_on(0.0, 1.0, 5.0);
  CHECK(std::abs(steklov_mean_oracle(c, {3, 0.1}, 0.2, 6) - 5.0) < 1e-12);
  try {
    steklov_mean_oracle(c, {5, 0.01}, 0.2, 4);
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}

TEST_CASE("sign identity between the two forms") {
  // (-h)^{-r} (-1)^{r-m+1} == h^{-r} (-1)^{1-m}
  for (int r = 1; r <= 3; ++r) {
    for (int m = 1; m <= r; ++m) {
      const double h = 0.37;
      const double lhs = std::pow(-h, -r) * std::pow(-1.0, r - m + 1);
      const double rhs = std::pow(h, -r) * std::pow(-1.0, 1 - m);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
    }
  }
}

TEST_CASE("domain violations") {
  const auto f = identity_on(0.0, 1.0);
  for (double x : {-0.01, 0.95}) {
    try {
      steklov_mean(f, {2, 0.05}, x);
      FAIL("expected DomainViolation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DomainViolation);
    }
  }
  CHECK_NOTHROW(steklov_mean(f, {2, 0.05}, 0.9));
  CHECK_THROWS_AS(steklov_mean_oracle(f, {2, 0.05}, 0.95, 4), Error);
}

TEST_CASE("Steklov mean only looks at [x, x + r h]") {
  const double x = 0.4;
  const SteklovConfig cfg{3, 0.05};
  const auto base = TargetFunction::analytic("base", {0.0, 1.0},
                                             [](double t) { return std::exp(t); });
  const auto perturbed = TargetFunction::analytic("perturbed", {0.0, 1.0}, [&](double t) {
    return (t < x || t > x + cfg.r * cfg.h) ? 100.0 * t - 7.0 : std::exp(t);
  });
  CHECK(steklov_mean(base, cfg, x) == steklov_mean(perturbed, cfg, x));
}

TEST_CASE("piecewise-linear targets are integrated exactly across kinks") {
  // |t - 1/2| has a kink inside [0.45, 0.45 + 2h]. With splitting, a two-point
  // rule is exact on each linear piece.
  const auto f = resolve_catalog_function("abs_shift");
  const auto coarse = QuadratureRule::gauss_legendre(2);
  const double x = 0.45;
  const double h = 0.05;
  const double fine = steklov_mean(f, {2, h}, x, QuadratureRule::gauss_legendre(64));
  CHECK(steklov_mean(f, {2, h}, x, coarse) == doctest::Approx(fine).epsilon(1e-13));

  const auto sampled =
      TargetFunction::sampled("pl", {0.0, 0.3, 0.42, 1.0}, {0.0, 1.0, -0.5, 2.0});
  const double reference = steklov_mean(sampled, {3, 0.1}, 0.2, QuadratureRule::gauss_legendre(200));
  CHECK(steklov_mean(sampled, {3, 0.1}, 0.2, coarse) == doctest::Approx(reference).epsilon(1e-12));
}
