#pragma once

#include <string>
#include <vector>

#include "steklov/target.hpp"

namespace steklov {

/// Test functions on [0, 1]:
///   const1     f = 1                 L = 0,  ||f|| = 1
///   identity   f = x                 L = 1,  ||f|| = 1
///   sin_pi     f = sin(pi x)         L = pi, ||f|| = 1
///   abs_shift  f = |x - 1/2|         L = 1,  ||f|| = 1/2
///   square     f = x^2               L = 2,  ||f|| = 1
///   step_half  f = 1 on [1/2, 1]     no L,   ||f|| = 1
/// Throws UnknownFunction.
TargetFunction resolve_catalog_function(const std::string& name);

std::vector<std::string> catalog_function_names();

}  // namespace steklov
