#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "steklov/catalog.hpp"
#include "steklov/csv.hpp"
#include "steklov/error.hpp"
#include "steklov/run.hpp"

using namespace steklov;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("steklov_io_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ErrorCode load_error(const fs::path& path) {
  try {
    load_sampled_function(path);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected load failure");
  return ErrorCode::InvalidArgument;
}

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_captured(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog functions") {
  const auto one = resolve_catalog_function("const1");
  CHECK(one(0.3) == 1.0);
  CHECK(*one.lipschitz_constant() == 0.0);
  CHECK(*one.sup_norm_hint() == 1.0);

  const auto sine = resolve_catalog_function("sin_pi");
  CHECK(sine(0.5) == 1.0);
  CHECK(*sine.lipschitz_constant() == std::numbers::pi);
  CHECK(*sine.sup_norm_hint() == 1.0);

  const auto step = resolve_catalog_function("step_half");
  CHECK(step(0.49) == 0.0);
  CHECK(step(0.5) == 1.0);
  CHECK_FALSE(step.lipschitz_constant().has_value());

  for (const auto& name : catalog_function_names()) {
    const auto f = resolve_catalog_function(name);
    CHECK(f.domain().lo == 0.0);
    CHECK(f.domain().hi == 1.0);
    CHECK(f.sup_norm_hint().has_value());
  }
  try {
    resolve_catalog_function("cosh");
    FAIL("expected UnknownFunction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFunction);
  }
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.125, 0.0}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("load sampled function") {
  const auto two = load_sampled_function(write_file("two.csv", "x,y\n0,0\n1,1\n"));
  CHECK(two.kind() == TargetKind::Sampled);
  CHECK(two(0.25) == 0.25);
  CHECK(*two.lipschitz_constant() == 1.0);
  CHECK(two.domain().lo == 0.0);
  CHECK(two.domain().hi == 1.0);

  std::ostringstream sine;
  sine << "x,y\r\n";
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    sine << format_double(x) << ',' << format_double(std::sin(std::numbers::pi * x)) << "\r\n";
  }
  const auto sampled = load_sampled_function(write_file("sine.csv", sine.str()));
  CHECK(*sampled.lipschitz_constant() == doctest::Approx(std::numbers::pi).epsilon(0.02));
  CHECK(sampled(0.5) == doctest::Approx(1.0));

  CHECK(load_error(write_file("dec.csv", "x,y\n0,0\n1,1\n0.5,2\n")) ==
        ErrorCode::NonMonotoneAbscissae);
  CHECK(load_error(write_file("one.csv", "x,y\n0,0\n")) == ErrorCode::TooFewPoints);
  CHECK(load_error(write_file("bad.csv", "x,y\n0,zero\n1,1\n")) == ErrorCode::ParseError);
  CHECK(load_error(write_file("ragged.csv", "x,y\n0,0,3\n1,1\n")) == ErrorCode::ParseError);
  CHECK(load_error(write_file("header.csv", "t,y\n0,0\n1,1\n")) == ErrorCode::ParseError);
  CHECK(load_error(scratch_dir() / "missing.csv") == ErrorCode::IoError);
}

TEST_CASE("run: approximate writes a deterministic CSV that reloads") {
  RunConfig config;
  config.subcommand = Subcommand::Approximate;
  config.function = "sin_pi";
  config.n = 20;
  config.r = 2;
  config.grid = 101;
  config.out = (scratch_dir() / "approx.csv").string();
  const auto first = run_captured(config);
  REQUIRE(first.status == kExitSuccess);
  const std::string bytes = read_file(config.out);
  CHECK(bytes.rfind("x,approx,exact,abs_error\n", 0) == 0);
  CHECK(run_captured(config).out == first.out);
  CHECK(read_file(config.out) == bytes);

  const auto meta = nlohmann::json::parse(first.out);
  CHECK(meta["n"] == 20);
  CHECK_FALSE(meta.contains("generated_at"));

  // Reload the approx column as a sampled function: values at the nodes match.
  const auto reloaded = load_sampled_function(config.out, "approx");
  std::istringstream rows(bytes);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    const auto comma1 = line.find(',');
    const auto comma2 = line.find(',', comma1 + 1);
    const double x = std::stod(line.substr(0, comma1));
    const double approx = std::stod(line.substr(comma1 + 1, comma2 - comma1 - 1));
    CHECK(std::abs(reloaded(x) - approx) < 1e-12);
  }

  config.stamp = true;
  CHECK(nlohmann::json::parse(run_captured(config).out).contains("generated_at"));
}

TEST_CASE("run: approximate on a sampled CSV") {
  RunConfig config;
  config.subcommand = Subcommand::Approximate;
  config.function = write_file("tri.csv", "x,y\n0,0\n0.5,1\n1,0\n").string();
  config.n = 10;
  config.r = 1;
  config.grid = 11;
  const auto result = run_captured(config);
  CHECK(result.status == kExitSuccess);
  CHECK(result.out.rfind("x,approx,exact,abs_error\n0,", 0) == 0);
}

TEST_CASE("run: precondition failures exit 1 with JSON on stderr") {
  RunConfig config;
  config.subcommand = Subcommand::Approximate;
  config.function = "sin_pi";
  config.n = 2;
  config.r = 3;
  const auto result = run_captured(config);
  CHECK(result.status == kExitUsage);
  const auto err = nlohmann::json::parse(result.err);
  CHECK(err["error"] == "InvalidRange");

  config.n = 10;
  config.function = "nope";
  CHECK(nlohmann::json::parse(run_captured(config).err)["error"] == "UnknownFunction");
  config.function = "sin_pi";
  config.kernel = "relu";
  CHECK(nlohmann::json::parse(run_captured(config).err)["error"] == "UnknownKernel");
}

TEST_CASE("run: convergence and bound-check") {
  RunConfig config;
  config.subcommand = Subcommand::Convergence;
  config.function = "sin_pi";
  config.r = 2;
  config.out = (scratch_dir() / "report.csv").string();
  const auto result = run_captured(config);
  REQUIRE(result.status == kExitSuccess);
  const std::string csv = read_file(config.out);
  CHECK(csv.rfind("n,sup_error,bound,empirical_order\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(nlohmann::json::parse(result.out)["omega"] == "lipschitz");
  CHECK(run_captured(config).out == result.out);
  CHECK(read_file(config.out) == csv);

  config.subcommand = Subcommand::BoundCheck;
  config.out.clear();
  const auto ok = run_captured(config);
  CHECK(ok.status == kExitSuccess);
  CHECK(nlohmann::json::parse(ok.out)["pass"] == true);

  config.bound_scale = 1e-6;
  const auto corrupted = run_captured(config);
  CHECK(corrupted.status == kExitCheckFailed);
  CHECK(nlohmann::json::parse(corrupted.out)["violations"].size() == 5);

  config.bound_scale = 1.0;
  config.r = 1;
  const auto order_one = run_captured(config);
  CHECK(order_one.status == kExitUsage);
  CHECK(nlohmann::json::parse(order_one.err)["error"] == "OrderOutOfScope");
}

TEST_CASE("run: estimated omega is labelled") {
  RunConfig config;
  config.subcommand = Subcommand::Convergence;
  config.function = "step_half";
  config.r = 2;
  config.n_list = {10, 20};
  config.grid = 201;
  config.out = (scratch_dir() / "step.csv").string();
  const auto result = run_captured(config);
  REQUIRE(result.status == kExitSuccess);
  CHECK(nlohmann::json::parse(result.out)["omega"] == "estimated-omega");
}

TEST_CASE("run: validate-kernel, moments, steklov-mean") {
  RunConfig config;
  config.subcommand = Subcommand::ValidateKernel;
  config.kernel = "logistic";
  CHECK(run_captured(config).status == kExitSuccess);
  config.kernel = "ramp-nonconforming";
  const auto ramp = run_captured(config);
  CHECK(ramp.status == kExitCheckFailed);
  CHECK(nlohmann::json::parse(ramp.out)["all_passed"] == false);

  config = {};
  config.subcommand = Subcommand::Moments;
  config.beta = 0;
  config.moment_u = 0.0;
  config.moment_n = 50;
  const auto moments = nlohmann::json::parse(run_captured(config).out);
  CHECK(std::abs(moments["value"].get<double>() - 1.0) < 1e-10);
  CHECK(std::abs(moments["truncated_moment"]["value"].get<double>() - 1.0) < 1e-12);
  CHECK(moments["grid_spacing"].get<double>() == doctest::Approx(1.0 / 4096));

  config = {};
  config.subcommand = Subcommand::SteklovMean;
  config.function = "sin_pi";
  config.r = 3;
  config.h = 0.01;
  config.x = 0.4;
  const auto mean = nlohmann::json::parse(run_captured(config).out);
  CHECK(std::abs(mean["value"].get<double>() - mean["oracle"].get<double>()) < 1e-10);
}
