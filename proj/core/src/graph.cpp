#include "cvge/graph.hpp"

#include "cvge/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <utility>

namespace cvge {

std::string ValidationIssue::describe() const {
  switch (kind) {
    case Kind::NotSquare:
      return "matrix is not square";
    case Kind::Empty:
      return "graph has no vertices";
    case Kind::NonFinite:
      return "non-finite weight at (" + std::to_string(row) + "," + std::to_string(col) + ")";
    case Kind::Asymmetric:
      return "asymmetry at (" + std::to_string(row) + "," + std::to_string(col) + ")";
    case Kind::NonzeroDiagonal:
      return "nonzero diagonal at " + std::to_string(row);
  }
  return "unknown issue";
}

std::string ValidationReport::to_string() const {
  if (issues.empty()) return "ok";
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.describe();
  }
  return out;
}

ValidationReport validate(const Eigen::MatrixXd& coupling) {
  ValidationReport report;
  using Kind = ValidationIssue::Kind;
  if (coupling.rows() != coupling.cols()) {
    report.issues.push_back({Kind::NotSquare});
    return report;
  }
  const auto n = static_cast<std::size_t>(coupling.rows());
  if (n == 0) {
    report.issues.push_back({Kind::Empty});
    return report;
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!std::isfinite(coupling(j, k))) report.issues.push_back({Kind::NonFinite, j, k});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (coupling(j, k) != coupling(k, j)) report.issues.push_back({Kind::Asymmetric, j, k});
  for (std::size_t j = 0; j < n; ++j)
    if (coupling(j, j) != 0.0) report.issues.push_back({Kind::NonzeroDiagonal, j, j});
  return report;
}

Graph::Graph(std::size_t n) {
  if (n == 0) {
    ValidationReport report;
    report.issues.push_back({ValidationIssue::Kind::Empty});
    throw InvalidGraph(std::move(report));
  }
  const auto dim = static_cast<Eigen::Index>(n);
  coupling_ = Eigen::MatrixXd::Zero(dim, dim);
}

Graph Graph::from_matrix(Eigen::MatrixXd coupling) {
  auto report = validate(coupling);
  if (!report.ok()) throw InvalidGraph(std::move(report));
  Graph g(static_cast<std::size_t>(coupling.rows()));
  g.coupling_ = std::move(coupling);
  return g;
}

void Graph::check_vertex(std::size_t v) const {
  if (v >= size())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(size()) + " vertices");
}

double Graph::weight(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return coupling_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
}

void Graph::set_edge(std::size_t u, std::size_t v, double w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!std::isfinite(w)) throw std::invalid_argument("edge weight must be finite");
  const auto a = static_cast<Eigen::Index>(u);
  const auto b = static_cast<Eigen::Index>(v);
  coupling_(a, b) = w;
  coupling_(b, a) = w;
}

bool Graph::is_binary() const noexcept {
  return ((coupling_.array() == 0.0) || (coupling_.array() == 1.0)).all();
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t count = 0;
  for (Eigen::Index j = 0; j < coupling_.rows(); ++j)
    for (Eigen::Index k = j + 1; k < coupling_.cols(); ++k)
      if (coupling_(j, k) != 0.0) ++count;
  return count;
}

GraphState::GraphState(Graph graph, double alpha) : graph_(std::move(graph)), alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be a finite positive number");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Path:
      return "path";
    case GraphKind::Cycle:
      return "cycle";
    case GraphKind::Star:
      return "star";
    case GraphKind::Complete:
      return "complete";
    case GraphKind::ErdosRenyi:
      return "erdos_renyi";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (auto kind : {GraphKind::Path, GraphKind::Cycle, GraphKind::Star, GraphKind::Complete,
                    GraphKind::ErdosRenyi})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

Graph generate(const GraphGenSpec& spec) {
  const bool random = spec.kind == GraphKind::ErdosRenyi;
  if (random != spec.p.has_value() || random != spec.seed.has_value())
    throw std::invalid_argument("p and seed must be given exactly for erdos_renyi graphs");
  if (spec.n == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (spec.kind == GraphKind::Cycle && spec.n < 3)
    throw std::invalid_argument("a cycle needs at least 3 vertices");

  Graph g(spec.n);
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case GraphKind::Path:
      for (std::size_t v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
      break;
    case GraphKind::Cycle:
      for (std::size_t v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n);
      break;
    case GraphKind::Star:
      for (std::size_t v = 1; v < n; ++v) g.set_edge(0, v);
      break;
    case GraphKind::Complete:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.set_edge(u, v);
      break;
    case GraphKind::ErdosRenyi: {
      const double p = *spec.p;
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
      std::mt19937_64 rng(*spec.seed);
      constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
          const double draw = static_cast<double>(rng() >> 11) * kScale;
          if (draw < p) g.set_edge(u, v);
        }
      break;
    }
  }
  return g;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> graph;
  std::map<std::pair<std::size_t, std::size_t>, double> seen;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!graph) {
      std::size_t n = 0;
      if (tokens.size() != 2 || tokens[0] != "vertices")
        throw ParseError(line_no, "expected header 'vertices <N>'");
      if (!parse_number(tokens[1], n) || n == 0)
        throw ParseError(line_no, "vertex count must be a positive integer");
      graph.emplace(n);
      continue;
    }

    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError(line_no, "expected 'u v' or 'u v w'");
    std::size_t u = 0;
    std::size_t v = 0;
    double w = 1.0;
    if (!parse_number(tokens[0], u) || !parse_number(tokens[1], v))
      throw ParseError(line_no, "vertex indices must be non-negative integers");
    if (tokens.size() == 3 && (!parse_number(tokens[2], w) || !std::isfinite(w)))
      throw ParseError(line_no, "weight must be a finite real number");
    const std::size_t n = graph->size();
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex index " + std::to_string(std::max(u, v)) +
                                    " out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));

    const auto key = std::minmax(u, v);
    if (auto it = seen.find(key); it != seen.end()) {
      if (it->second != w)
        throw ParseError(line_no, "edge (" + std::to_string(key.first) + "," +
                                      std::to_string(key.second) + ") repeated with conflicting weight");
      continue;
    }
    seen.emplace(key, w);
    graph->set_edge(u, v, w);
  }

  if (!graph) throw ParseError(0, "missing 'vertices <N>' header");
  return std::move(*graph);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.size() << '\n';
  const auto& a = g.coupling();
  for (Eigen::Index u = 0; u < a.rows(); ++u)
    for (Eigen::Index v = u + 1; v < a.cols(); ++v) {
      const double w = a(u, v);
      if (w == 0.0) continue;
      out << u << ' ' << v;
      if (w != 1.0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", w);
        out << ' ' << buf;
      }
      out << '\n';
    }
  return out.str();
}

std::size_t neighbour_count(const Graph& g, std::size_t v) {
  if (v >= g.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>((g.coupling().row(static_cast<Eigen::Index>(v)).array() != 0.0).count());
}

std::size_t degree(const Graph& g, std::size_t v) {
  const std::size_t count = neighbour_count(g, v);
  if (!g.is_binary())
    throw std::domain_error("degree is defined for binary graphs only; use kappa for weighted graphs");
  return count;
}

double kappa(const Graph& g, std::size_t v) {
  if (v >= g.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const auto row = g.coupling().row(static_cast<Eigen::Index>(v));
  // Fixed ascending accumulation order.
  double sum = 0.0;
  for (Eigen::Index j = 0; j < row.size(); ++j) sum += row(j) * row(j);
  return sum;
}

}  // namespace cvge
