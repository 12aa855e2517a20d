#include "steklov/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view text, std::size_t line_number) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) +
                                           ": cannot parse '" + std::string(text) +
                                           "' as a number");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

TargetFunction load_sampled_function(const std::filesystem::path& path,
                                     std::string_view y_column) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");

  std::string line;
  std::size_t line_number = 0;
  std::size_t y_index = 0;
  std::size_t width = 0;
  bool have_header = false;
  std::vector<double> xs;
  std::vector<double> ys;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (!have_header) {
      if (fields.empty() || fields[0] != "x") {
        throw Error(ErrorCode::ParseError, "header must start with column 'x'");
      }
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i] == y_column) y_index = i;
      }
      if (y_index == 0) {
        throw Error(ErrorCode::ParseError,
                    "header has no column '" + std::string(y_column) + "'");
      }
      width = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != width) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) + ": expected " +
                                             std::to_string(width) + " fields");
    }
    xs.push_back(parse_number(fields[0], line_number));
    ys.push_back(parse_number(fields[y_index], line_number));
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "'" + path.string() + "' is empty");

  return TargetFunction::sampled(path.filename().string(), std::move(xs), std::move(ys));
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace steklov
