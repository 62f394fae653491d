#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rp::cli {

enum ExitCode : int {
  kOk = 0,
  kResonance = 2,
  kNonexistence = 3,
  kUndecided = 4,
  kParse = 64,
  kPrecondition = 65,
};

enum class Command { kSolve, kCertify, kMargin, kCounterexample, kExplore, kReport };

struct RunConfig {
  Command command = Command::kSolve;
  double omega = 1.0;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::size_t grid_m = 4096;
  bool grid_explicit = false;
  std::optional<double> tolerance;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;
  int degree = 8;
  std::string variant = "auto";
};

/// Runs one subcommand. JSON goes to --output when given, otherwise to `out`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rp::cli
