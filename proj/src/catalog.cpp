#include "steklov/catalog.hpp"

#include <cmath>
#include <numbers>

#include "steklov/error.hpp"

namespace steklov {

TargetFunction resolve_catalog_function(const std::string& name) {
  const Interval unit{0.0, 1.0};
  if (name == "const1") {
    return TargetFunction::analytic(name, unit, [](double) { return 1.0; }, 0.0, 1.0);
  }
  if (name == "identity") {
    return TargetFunction::analytic(name, unit, [](double x) { return x; }, 1.0, 1.0);
  }
  if (name == "sin_pi") {
    return TargetFunction::analytic(
        name, unit, [](double x) { return std::sin(std::numbers::pi * x); }, std::numbers::pi,
        1.0);
  }
  if (name == "abs_shift") {
    return TargetFunction::analytic(
        name, unit, [](double x) { return std::abs(x - 0.5); }, 1.0, 0.5, {0.5});
  }
  if (name == "square") {
    return TargetFunction::analytic(name, unit, [](double x) { return x * x; }, 2.0, 1.0);
  }
  if (name == "step_half") {
    return TargetFunction::analytic(
        name, unit, [](double x) { return x >= 0.5 ? 1.0 : 0.0; }, std::nullopt, 1.0, {0.5});
  }
  throw Error(ErrorCode::UnknownFunction, "unknown function '" + name + "'");
}

std::vector<std::string> catalog_function_names() {
  return {"const1", "identity", "sin_pi", "abs_shift", "square", "step_half"};
}

}  // namespace steklov
