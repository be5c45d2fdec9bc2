#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "table.hpp"

namespace cvge::cli {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kValidationFailed = 1, kUsageError = 2, kIoError = 3 };

/// Bad flags, bad values, or unreadable input (exit 2).
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output could not be written (exit 3).
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // profile | spectrum | validate | oracle | scan | gen

  std::optional<std::string> graph_path;
  std::optional<std::string> gen_kind;
  std::optional<std::size_t> gen_n;
  std::optional<double> gen_p;
  std::optional<std::uint64_t> gen_seed;

  std::vector<double> alphas{1.0};
  bool numeric = false;
  std::optional<std::size_t> grid_size;
  double extent_mult = 10.0;
  std::size_t max_grid = 4096;
  std::vector<double> kappas;
  std::optional<std::string> kappa_range;
  double kappa_step = 1.0;
  std::size_t count = 10;
  std::optional<double> tolerance;
  std::size_t samples = 1;

  Format format = Format::Text;
  std::optional<std::string> out_path;
};

/// Parses command-line arguments (argv[0] excluded), including any --config file.
/// Flags on the command line override values from the config file.
/// Returns std::nullopt after printing help.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Runs a parsed configuration, writing the command's output to `out`.
/// Returns 0 or 1; throws UsageError, IoError, or library exceptions.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, execute, route output to --out, map failures to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvge::cli
