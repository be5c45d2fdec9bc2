#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cvge {

struct ValidationIssue {
  enum class Kind { NotSquare, Empty, NonFinite, Asymmetric, NonzeroDiagonal };
  Kind kind;
  std::size_t row = 0;
  std::size_t col = 0;

  std::string describe() const;
  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

/// Every invariant violation found in a candidate coupling matrix.
struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
  std::string to_string() const;
};

class InvalidGraph : public std::invalid_argument {
 public:
  explicit InvalidGraph(ValidationReport report)
      : std::invalid_argument("invalid coupling matrix: " + report.to_string()),
        report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks a raw matrix against the Graph invariants (square, n >= 1, finite,
/// symmetric, zero diagonal). Asymmetry is reported once per unordered pair (j < k).
ValidationReport validate(const Eigen::MatrixXd& coupling);

/// Undirected graph with real edge weights. Always satisfies its invariants:
/// symmetric coupling, zero diagonal, at least one vertex.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws InvalidGraph carrying the full report when the matrix is not a valid coupling.
  static Graph from_matrix(Eigen::MatrixXd coupling);

  std::size_t size() const noexcept { return static_cast<std::size_t>(coupling_.rows()); }
  const Eigen::MatrixXd& coupling() const noexcept { return coupling_; }
  double weight(std::size_t u, std::size_t v) const;

  /// Sets a_uv = a_vu = w. A zero weight removes the edge.
  void set_edge(std::size_t u, std::size_t v, double w = 1.0);

  /// True when every coupling is exactly 0 or 1.
  bool is_binary() const noexcept;
  std::size_t edge_count() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.coupling_.rows() == b.coupling_.rows() && a.coupling_ == b.coupling_;
  }

 private:
  void check_vertex(std::size_t v) const;

  Eigen::MatrixXd coupling_;
};

inline ValidationReport validate(const Graph&) { return {}; }

/// A graph together with the oscillator width parameter.
class GraphState {
 public:
  GraphState(Graph graph, double alpha);

  const Graph& graph() const noexcept { return graph_; }
  double alpha() const noexcept { return alpha_; }

 private:
  Graph graph_;
  double alpha_;
};

enum class GraphKind { Path, Cycle, Star, Complete, ErdosRenyi };

std::string_view to_string(GraphKind kind);
/// Accepts the lower-case names: path, cycle, star, complete, erdos_renyi.
std::optional<GraphKind> parse_graph_kind(std::string_view name);

struct GraphGenSpec {
  GraphKind kind = GraphKind::Path;
  std::size_t n = 1;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;

  static GraphGenSpec path(std::size_t n) { return {GraphKind::Path, n, {}, {}}; }
  static GraphGenSpec cycle(std::size_t n) { return {GraphKind::Cycle, n, {}, {}}; }
  static GraphGenSpec star(std::size_t n) { return {GraphKind::Star, n, {}, {}}; }
  static GraphGenSpec complete(std::size_t n) { return {GraphKind::Complete, n, {}, {}}; }
  static GraphGenSpec erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    return {GraphKind::ErdosRenyi, n, p, seed};
  }
};

/// Deterministic graph generation. Star graphs use vertex 0 as the center.
/// Erdos-Renyi draws use mt19937_64 seeded with `seed`; pairs (u, v), u < v, are visited
/// in lexicographic order and the edge is kept when (draw >> 11) * 2^-53 < p.
Graph generate(const GraphGenSpec& spec);

/// Edge-list text format: '#' comment lines, header "vertices N", then "u v [w]" lines.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list. Unit weights are written as "u v"; other weights with
/// round-trip precision.
std::string serialize_edge_list(const Graph& g);

/// Number of neighbours of v. Throws std::domain_error on graphs with non-binary weights,
/// where kappa() is the meaningful quantity.
std::size_t degree(const Graph& g, std::size_t v);
/// Number of nonzero couplings of v, for any weights.
std::size_t neighbour_count(const Graph& g, std::size_t v);
/// Sum of squared couplings of v. Equals degree(g, v) for binary graphs.
double kappa(const Graph& g, std::size_t v);

}  // namespace cvge
