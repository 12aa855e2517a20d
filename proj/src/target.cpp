#include "steklov/target.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov {

double Interval::slack() const noexcept {
  return 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
}

TargetFunction TargetFunction::analytic(std::string name, Interval domain, Eval eval,
                                        std::optional<double> lipschitz_constant,
                                        std::optional<double> sup_norm_hint,
                                        std::vector<double> breakpoints) {
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
    throw Error(ErrorCode::InvalidArgument, "target domain must satisfy a < b");
  }
  if (!eval) throw Error(ErrorCode::InvalidArgument, "target function needs an evaluator");
  TargetFunction f;
  f.name_ = std::move(name);
  f.domain_ = domain;
  f.kind_ = TargetKind::Catalog;
  f.eval_ = std::move(eval);
  f.lipschitz_ = lipschitz_constant;
  f.sup_norm_hint_ = sup_norm_hint;
  std::sort(breakpoints.begin(), breakpoints.end());
  f.breakpoints_ = std::move(breakpoints);
  return f;
}

TargetFunction TargetFunction::sampled(std::string name, std::vector<double> xs,
                                       std::vector<double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::InvalidArgument, "abscissae and ordinates differ in length");
  }
  if (xs.size() < 2) throw Error(ErrorCode::TooFewPoints, "sampled function needs >= 2 points");
  double steepest = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw Error(ErrorCode::InvalidArgument, "sample " + std::to_string(i) + " is not finite");
    }
    if (i > 0) {
      if (!(xs[i] > xs[i - 1])) {
        std::ostringstream msg;
        msg << "abscissae must be strictly increasing (row " << i << ": " << xs[i]
            << " after " << xs[i - 1] << ")";
        throw Error(ErrorCode::NonMonotoneAbscissae, msg.str());
      }
      steepest = std::max(steepest, std::abs((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1])));
    }
  }

  TargetFunction f;
  f.name_ = std::move(name);
  f.domain_ = {xs.front(), xs.back()};
  f.kind_ = TargetKind::Sampled;
  f.lipschitz_ = steepest;
  f.sup_norm_hint_ = std::abs(*std::max_element(
      ys.begin(), ys.end(), [](double l, double r) { return std::abs(l) < std::abs(r); }));
  f.breakpoints_.assign(xs.begin() + 1, xs.end() - 1);
  f.xs_ = std::move(xs);
  f.ys_ = std::move(ys);
  f.eval_ = [xs = f.xs_, ys = f.ys_](double x) {
    auto upper = std::upper_bound(xs.begin(), xs.end(), x);
    if (upper == xs.begin()) return ys.front();
    if (upper == xs.end()) return ys.back();
    const auto i = static_cast<std::size_t>(upper - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  };
  return f;
}

double TargetFunction::operator()(double x) const {
  const double slack = domain_.slack();
  if (!(x >= domain_.lo - slack && x <= domain_.hi + slack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "evaluation of '" << name_ << "' at " << x << " outside [" << domain_.lo << ", "
        << domain_.hi << "]";
    throw Error(ErrorCode::DomainViolation, msg.str());
  }
  return eval_(std::clamp(x, domain_.lo, domain_.hi));
}

std::vector<double> TargetFunction::breakpoints_in(double lo, double hi) const {
  auto first = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), lo);
  auto last = std::lower_bound(first, breakpoints_.end(), hi);
  return {first, last};
}

double sup_norm(const TargetFunction& f) {
  if (f.sup_norm_hint()) return *f.sup_norm_hint();
  constexpr int kPoints = 10000;
  const Interval& d = f.domain();
  double best = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double x = i + 1 == kPoints ? d.hi : d.lo + d.length() * i / (kPoints - 1);
    best = std::max(best, std::abs(f(x)));
  }
  return best;
}

}  // namespace steklov
