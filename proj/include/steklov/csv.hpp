#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "steklov/target.hpp"

namespace steklov {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Reads a CSV with a header row into a sampled target function. The first
/// column is x; the ordinate is the column named y_column.
///
/// Throws IoError, ParseError, NonMonotoneAbscissae, or TooFewPoints.
TargetFunction load_sampled_function(const std::filesystem::path& path,
                                     std::string_view y_column = "y");

/// Writes text to path, replacing any existing file. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace steklov
