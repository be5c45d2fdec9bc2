#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cvge/error.hpp"
#include "cvge/graph.hpp"

namespace cvge::cli {

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Geometric entanglement of single oscillators in harmonic-oscillator graph states", "cvge"};
  app.set_config("--config", "", "Read options from a key = value file (command-line flags win)");

  app.add_option("command", cfg.command, "profile | spectrum | validate | oracle | scan | gen")
      ->required()
      ->check(CLI::IsMember({"profile", "spectrum", "validate", "oracle", "scan", "gen"}));

  auto* graph = app.add_option("--graph", cfg.graph_path, "Edge-list file");
  auto* gen = app.add_option("--gen", cfg.gen_kind, "Generator: path, cycle, star, complete, erdos_renyi");
  graph->excludes(gen);
  app.add_option("--n", cfg.gen_n, "Generator vertex count");
  app.add_option("--p", cfg.gen_p, "Edge probability (erdos_renyi)");
  app.add_option("--seed", cfg.gen_seed, "PRNG seed (erdos_renyi)");
  app.add_option("--samples", cfg.samples, "Number of sampled graphs for scan ensembles (seeds seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);

  app.add_option("--alpha", cfg.alphas, "Oscillator width; validate accepts a comma-separated list")
      ->delimiter(',');
  app.add_flag("--numeric", cfg.numeric, "Add Nystrom diagnostics to profile output");
  app.add_option("--grid-size", cfg.grid_size, "Quadrature nodes (initial size for adaptive runs)");
  app.add_option("--extent-mult", cfg.extent_mult, "Truncation half-width in units of 1/sqrt(alpha); >= 8");
  app.add_option("--max-grid", cfg.max_grid, "Node cap for adaptive refinement");
  app.add_option("--kappa", cfg.kappas, "Coupling strength(s), comma-separated")->delimiter(',');
  app.add_option("--kappa-range", cfg.kappa_range, "Coupling range LO..HI (stepped by --kappa-step)");
  app.add_option("--kappa-step", cfg.kappa_step, "Step for --kappa-range")->check(CLI::PositiveNumber);
  app.add_option("--count", cfg.count, "Number of eigenvalues for spectrum")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tolerance, "PASS/FAIL tolerance for validate and oracle");

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "Output path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  static const std::map<std::string, Format> kFormats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  cfg.format = kFormats.at(format);
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(args, out);
    if (!cfg) return kSuccess;

    std::ostringstream buffer;
    const int code = execute(*cfg, buffer, err);
    if (cfg->out_path) {
      std::ofstream file(*cfg->out_path, std::ios::binary);
      if (!file) throw IoError("cannot open output file '" + *cfg->out_path + "'");
      file << buffer.str();
      if (!file.flush()) throw IoError("failed writing '" + *cfg->out_path + "'");
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const IoError& e) {
    err << "cvge: I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const UsageError& e) {
    err << "cvge: " << e.what() << '\n';
    return kUsageError;
  } catch (const cvge::ParseError& e) {
    err << "cvge: parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const cvge::ConvergenceError& e) {
    err << "cvge: numerics did not converge: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, domain_error, InvalidGraph
    err << "cvge: invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "cvge: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace cvge::cli
