#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "cvge/cvge.hpp"

namespace cvge::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDefaultValidateTolerance = 1e-8;
constexpr double kDefaultOracleTolerance = 1e-6;
constexpr std::size_t kDefaultNumericGrid = 256;
constexpr std::size_t kDefaultOracleGrid = 64;

struct ResolvedGraph {
  Graph graph;
  Provenance provenance;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphGenSpec gen_spec(const RunConfig& cfg, std::uint64_t seed_offset = 0) {
  const auto kind = parse_graph_kind(*cfg.gen_kind);
  if (!kind) throw UsageError("unknown generator '" + *cfg.gen_kind + "'");
  if (!cfg.gen_n) throw UsageError("--gen needs --n");
  GraphGenSpec spec{*kind, *cfg.gen_n, {}, {}};
  if (*kind == GraphKind::ErdosRenyi) {
    if (!cfg.gen_p || !cfg.gen_seed) throw UsageError("erdos_renyi needs --p and --seed");
    spec.p = cfg.gen_p;
    spec.seed = *cfg.gen_seed + seed_offset;
  } else if (cfg.gen_p || cfg.gen_seed) {
    throw UsageError("--p and --seed apply to erdos_renyi only");
  }
  return spec;
}

std::string describe(const GraphGenSpec& spec) {
  std::string text = "gen:" + std::string(to_string(spec.kind)) + " n=" + std::to_string(spec.n);
  if (spec.p) text += " p=" + format_real(*spec.p);
  return text;
}

bool has_graph_source(const RunConfig& cfg) { return cfg.graph_path || cfg.gen_kind; }

ResolvedGraph resolve_graph(const RunConfig& cfg) {
  if (cfg.graph_path) return {parse_edge_list(read_file(*cfg.graph_path)), {"file:" + *cfg.graph_path, {}}};
  if (cfg.gen_kind) {
    const auto spec = gen_spec(cfg);
    return {generate(spec), {describe(spec), spec.seed}};
  }
  throw UsageError("command '" + cfg.command + "' needs --graph PATH or --gen KIND");
}

double single_alpha(const RunConfig& cfg) {
  if (cfg.alphas.size() != 1) throw UsageError("command '" + cfg.command + "' takes a single --alpha");
  return cfg.alphas.front();
}

std::vector<double> kappa_values(const RunConfig& cfg) {
  std::vector<double> values = cfg.kappas;
  if (cfg.kappa_range) {
    const auto& text = *cfg.kappa_range;
    const auto sep = text.find("..");
    double lo = 0.0;
    double hi = 0.0;
    try {
      if (sep == std::string::npos) throw std::invalid_argument("missing '..'");
      std::size_t used = 0;
      lo = std::stod(text.substr(0, sep), &used);
      if (used != sep) throw std::invalid_argument("trailing characters");
      const auto rest = text.substr(sep + 2);
      hi = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--kappa-range must look like LO..HI, got '" + text + "'");
    }
    if (hi < lo) throw UsageError("--kappa-range needs LO <= HI");
    const double step = cfg.kappa_step;
    const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= steps; ++i) values.push_back(lo + static_cast<double>(i) * step);
  }
  for (double k : values)
    if (!(k >= 0.0) || !std::isfinite(k)) throw UsageError("kappa values must be finite and non-negative");
  return values;
}

GridPolicy grid_policy(const RunConfig& cfg) {
  GridPolicy policy;
  policy.extent_multiplier = cfg.extent_mult;
  policy.initial_size = cfg.grid_size.value_or(kDefaultNumericGrid);
  policy.max_size = cfg.max_grid;
  if (policy.extent_multiplier < 8.0) throw UsageError("--extent-mult must be at least 8");
  if (policy.initial_size < 2 || policy.initial_size > policy.max_size)
    throw UsageError("--grid-size must lie in [2, --max-grid]");
  return policy;
}

void write_table(const Table& table, Format format, std::ostream& out, const std::string& text_header,
                 Json json) {
  switch (format) {
    case Format::Csv:
      table.write_csv(out);
      break;
    case Format::Text:
      if (!text_header.empty()) out << text_header << '\n';
      table.write_text(out);
      break;
    case Format::Json:
      out << json.dump(2) << '\n';
      break;
  }
}

Cell cell(std::size_t v) { return static_cast<std::int64_t>(v); }
Cell cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

// ---------------------------------------------------------------------------

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  const double alpha = single_alpha(cfg);
  auto [graph, provenance] = resolve_graph(cfg);
  EntanglementReport report = profile(GraphState(std::move(graph), alpha), std::move(provenance));

  if (cfg.numeric) {
    const GridPolicy policy = grid_policy(cfg);
    std::map<double, NumericResult> cache;
    for (auto& rec : report.vertices) {
      auto it = cache.find(rec.kappa);
      if (it == cache.end())
        it = cache.emplace(rec.kappa, numeric_entanglement(KernelSpec(alpha, rec.kappa), policy)).first;
      rec.numeric = NumericDiagnostics{it->second.lambda_max_numeric,
                                       std::abs(it->second.lambda_max_numeric - rec.lambda_max),
                                       it->second.grid_size};
    }
  }

  Table table;
  table.columns = {"vertex", "degree", "kappa", "lambda_max", "entanglement"};
  if (cfg.numeric) table.columns.insert(table.columns.end(), {"numeric_lambda_max", "deviation", "grid_size"});
  Json vertices = Json::array();
  for (const auto& rec : report.vertices) {
    std::vector<Cell> row{cell(rec.id), cell(rec.degree), rec.kappa, rec.lambda_max, rec.entanglement};
    Json numeric = nullptr;
    if (rec.numeric) {
      row.insert(row.end(), {rec.numeric->lambda_max, rec.numeric->deviation, cell(rec.numeric->grid_size)});
      numeric = Json{{"lambda_max", rec.numeric->lambda_max},
                     {"deviation", rec.numeric->deviation},
                     {"grid_size", rec.numeric->grid_size}};
    }
    table.rows.push_back(std::move(row));
    vertices.push_back(Json{{"id", rec.id},
                            {"degree", rec.degree},
                            {"kappa", rec.kappa},
                            {"lambda_max", rec.lambda_max},
                            {"entanglement", rec.entanglement},
                            {"numeric", std::move(numeric)}});
  }

  const auto& prov = report.provenance;
  Json json{{"alpha", report.alpha},
            {"graph", Json{{"n", report.n},
                           {"source", prov.source},
                           {"seed", prov.seed ? Json(*prov.seed) : Json(nullptr)}}},
            {"vertices", std::move(vertices)}};
  std::string header = "# alpha=" + format_real(report.alpha) + " n=" + std::to_string(report.n) +
                       " source=" + prov.source;
  if (prov.seed) header += " seed=" + std::to_string(*prov.seed);
  write_table(table, cfg.format, out, header, std::move(json));
  return kSuccess;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const double alpha = single_alpha(cfg);
  const auto kappas = kappa_values(cfg);
  if (kappas.size() != 1) throw UsageError("spectrum needs exactly one --kappa");
  const KernelSpec spec(alpha, kappas.front());
  const Spectrum s = spectrum(spec, cfg.count);

  Table table;
  table.columns = {"n", "lambda", "cumulative"};
  double cumulative = 0.0;
  for (std::size_t n = 0; n < s.count(); ++n) {
    cumulative += s.values[n];
    table.rows.push_back({cell(n), s.values[n], cumulative});
  }
  Json json{{"alpha", alpha}, {"kappa", spec.kappa()}, {"ratio", s.ratio}, {"eigenvalues", table.to_json()}};
  write_table(table, cfg.format, out,
              "# alpha=" + format_real(alpha) + " kappa=" + format_real(spec.kappa()) +
                  " ratio=" + format_real(s.ratio),
              std::move(json));
  return kSuccess;
}

void write_summary(const Table& table, Format format, std::ostream& out, std::ostream& err, Json json,
                   const std::string& summary) {
  write_table(table, format, out, "", std::move(json));
  // CSV stays a pure table; the verdict goes to the diagnostic stream.
  if (format == Format::Text) out << summary << '\n';
  if (format == Format::Csv) err << summary << '\n';
}

std::string verdict_line(bool pass, double max_dev, double tol, std::size_t cells) {
  return std::string(pass ? "PASS" : "FAIL") + " max_deviation=" + format_real(max_dev) +
         " tolerance=" + format_real(tol) + " cells=" + std::to_string(cells);
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto kappas = kappa_values(cfg);
  if (kappas.empty()) kappas = {0, 1, 2, 3, 5, 8, 9};
  if (cfg.alphas.empty()) throw UsageError("validate needs at least one --alpha");
  const double tol = cfg.tolerance.value_or(kDefaultValidateTolerance);
  const GridPolicy policy = grid_policy(cfg);

  Table table;
  table.columns = {"alpha", "kappa", "lambda_max", "lambda_max_kappa_over_alpha", "lambda_max_numeric",
                   "deviation", "deviation_kappa_over_alpha", "grid_size", "status"};
  bool pass = true;
  double max_dev = 0.0;
  for (double alpha : cfg.alphas) {
    for (double k : kappas) {
      const KernelSpec spec(alpha, k);
      const double closed = lambda_max(spec);
      const double shorthand = lambda_max_kappa_over_alpha(spec);
      std::vector<Cell> row{alpha, k, closed, shorthand};
      try {
        const NumericResult numeric = numeric_entanglement(spec, policy);
        const double dev = std::abs(closed - numeric.lambda_max_numeric);
        const bool ok = dev < tol;
        pass = pass && ok;
        max_dev = std::max(max_dev, dev);
        row.insert(row.end(), {numeric.lambda_max_numeric, dev, std::abs(shorthand - numeric.lambda_max_numeric),
                               cell(numeric.grid_size), std::string(ok ? "PASS" : "FAIL")});
      } catch (const ConvergenceError& e) {
        pass = false;
        err << "alpha=" << format_real(alpha) << " kappa=" << format_real(k) << ": " << e.what() << '\n';
        row.insert(row.end(), {Cell{}, Cell{}, Cell{}, Cell{}, std::string("NO_CONVERGENCE")});
      }
      table.rows.push_back(std::move(row));
    }
  }
  const std::string summary = verdict_line(pass, max_dev, tol, table.rows.size());
  Json json{{"tolerance", tol},
            {"cells", table.to_json()},
            {"max_deviation", max_dev},
            {"result", pass ? "PASS" : "FAIL"}};
  write_summary(table, cfg.format, out, err, std::move(json), summary);
  return pass ? kSuccess : kValidationFailed;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double alpha = single_alpha(cfg);
  auto [graph, provenance] = resolve_graph(cfg);
  if (graph.size() > kMaxOracleVertices)
    throw UsageError("oracle supports graphs with at most " + std::to_string(kMaxOracleVertices) +
                     " vertices, got " + std::to_string(graph.size()));
  if (cfg.extent_mult < 8.0) throw UsageError("--extent-mult must be at least 8");
  const double tol = cfg.tolerance.value_or(kDefaultOracleTolerance);
  const GraphState state(std::move(graph), alpha);
  const QuadratureGrid grid = build_grid(cfg.extent_mult / std::sqrt(alpha), cfg.grid_size.value_or(kDefaultOracleGrid));

  Table table;
  table.columns = {"vertex", "kappa", "lambda_max", "full_reduction", "alternating",
                   "deviation_full", "deviation_alternating", "status"};
  bool pass = true;
  double max_dev = 0.0;
  for (std::size_t v = 0; v < state.graph().size(); ++v) {
    const KernelSpec spec(alpha, kappa(state.graph(), v));
    const double closed = lambda_max(spec);
    const double full = top_eigenvalues(reduce_full_state(state, v, grid), 1).lambda_max_numeric;
    const double dev_full = std::abs(full - closed);
    std::optional<double> alternating;
    std::optional<double> dev_alt;
    if (state.graph().size() >= 2) {
      alternating = alternating_maximization(state, v, grid, 1e-13).lambda_max_numeric;
      dev_alt = std::abs(*alternating - closed);
    }
    const double worst = std::max(dev_full, dev_alt.value_or(0.0));
    const bool ok = worst < tol;
    pass = pass && ok;
    max_dev = std::max(max_dev, worst);
    table.rows.push_back({cell(v), spec.kappa(), closed, full, cell(alternating), dev_full, cell(dev_alt),
                          std::string(ok ? "PASS" : "FAIL")});
  }
  const std::string summary = verdict_line(pass, max_dev, tol, table.rows.size());
  Json json{{"alpha", alpha},
            {"graph", Json{{"n", state.graph().size()}, {"source", provenance.source}}},
            {"grid_size", grid.size()},
            {"tolerance", tol},
            {"vertices", table.to_json()},
            {"max_deviation", max_dev},
            {"result", pass ? "PASS" : "FAIL"}};
  write_summary(table, cfg.format, out, err, std::move(json), summary);
  return pass ? kSuccess : kValidationFailed;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const double alpha = single_alpha(cfg);
  Table table;

  if (has_graph_source(cfg)) {
    // (kappa, degree) -> multiplicity over every vertex of every sampled graph.
    std::map<std::pair<double, std::size_t>, std::size_t> counts;
    std::string source;
    std::optional<std::uint64_t> seed;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      Graph g = [&] {
        if (cfg.graph_path) return parse_edge_list(read_file(*cfg.graph_path));
        return generate(gen_spec(cfg, s));
      }();
      for (std::size_t v = 0; v < g.size(); ++v) ++counts[{kappa(g, v), neighbour_count(g, v)}];
    }
    table.columns = {"degree", "kappa", "entanglement", "multiplicity"};
    for (const auto& [key, count] : counts)
      table.rows.push_back({cell(key.second), key.first, entanglement(KernelSpec(alpha, key.first)), cell(count)});
    const ResolvedGraph first = resolve_graph(cfg);
    Json json{{"alpha", alpha},
              {"source", first.provenance.source},
              {"seed", first.provenance.seed ? Json(*first.provenance.seed) : Json(nullptr)},
              {"samples", cfg.samples},
              {"rows", table.to_json()}};
    std::string header = "# alpha=" + format_real(alpha) + " source=" + first.provenance.source +
                         " samples=" + std::to_string(cfg.samples);
    if (first.provenance.seed) header += " seed=" + std::to_string(*first.provenance.seed);
    write_table(table, cfg.format, out, header, std::move(json));
    return kSuccess;
  }

  auto kappas = kappa_values(cfg);
  if (kappas.empty()) throw UsageError("scan needs --kappa, --kappa-range, or a graph source");
  std::sort(kappas.begin(), kappas.end());
  table.columns = {"kappa_over_alpha2", "kappa", "entanglement"};
  for (double k : kappas) table.rows.push_back({k / (alpha * alpha), k, entanglement(KernelSpec(alpha, k))});
  Json json{{"alpha", alpha}, {"rows", table.to_json()}};
  write_table(table, cfg.format, out, "# alpha=" + format_real(alpha), std::move(json));
  return kSuccess;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.gen_kind) throw UsageError("gen needs --gen KIND");
  const GraphGenSpec spec = gen_spec(cfg);
  const Graph g = generate(spec);
  out << "# " << describe(spec);
  if (spec.seed) out << " seed=" << *spec.seed;
  out << '\n' << serialize_edge_list(g);
  return kSuccess;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "profile") return cmd_profile(cfg, out);
  if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
  if (cfg.command == "validate") return cmd_validate(cfg, out, err);
  if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
  if (cfg.command == "scan") return cmd_scan(cfg, out);
  if (cfg.command == "gen") return cmd_gen(cfg, out);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace cvge::cli
