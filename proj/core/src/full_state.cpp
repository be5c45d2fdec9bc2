#include "cvge/full_state.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvge/error.hpp"

namespace cvge {

namespace {

void check_oracle_input(const GraphState& state, std::size_t v, const QuadratureGrid& grid) {
  const std::size_t n = state.graph().size();
  if (n > kMaxOracleVertices)
    throw std::invalid_argument("tensor oracle supports at most " + std::to_string(kMaxOracleVertices) +
                                " vertices, got " + std::to_string(n));
  if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  if (grid.extent < minimum_extent(state.alpha()) * (1.0 - 1e-12))
    throw std::invalid_argument("grid extent is below the minimum for alpha = " +
                                std::to_string(state.alpha()));
}

// Weighted amplitudes sqrt(w_i W_r) psi(x_v = node_i, rest = r), one row per node of the
// kept coordinate and one column per point of the tensor grid over the other coordinates.
Eigen::MatrixXcd weighted_amplitudes(const GraphState& state, std::size_t v, const QuadratureGrid& grid) {
  const Graph& g = state.graph();
  const std::size_t n = g.size();
  const std::size_t m = grid.size();
  const double alpha = state.alpha();

  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < n; ++j)
    if (j != v) others.push_back(j);
  std::size_t rest_points = 1;
  for (std::size_t j = 0; j < others.size(); ++j) rest_points *= m;

  const double norm = std::pow(alpha / std::numbers::pi, static_cast<double>(n) / 4.0);
  Eigen::MatrixXcd amp(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(rest_points));
  std::vector<double> x(n, 0.0);
  std::vector<std::size_t> index(others.size(), 0);

  for (std::size_t r = 0; r < rest_points; ++r) {
    // Mixed-radix decode of r; the last listed coordinate varies fastest.
    std::size_t rem = r;
    double rest_weight = 1.0;
    for (std::size_t t = others.size(); t-- > 0;) {
      index[t] = rem % m;
      rem /= m;
      x[others[t]] = grid.nodes[index[t]];
      rest_weight *= grid.weights[index[t]];
    }
    for (std::size_t i = 0; i < m; ++i) {
      x[v] = grid.nodes[i];
      double gauss = 0.0;
      double phase = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        gauss += x[j] * x[j];
        for (std::size_t k = j + 1; k < n; ++k) phase += g.coupling()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * x[j] * x[k];
      }
      const double magnitude = norm * std::exp(-0.5 * alpha * gauss) * std::sqrt(grid.weights[i] * rest_weight);
      amp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r)) = std::polar(magnitude, phase);
    }
  }
  return amp;
}

}  // namespace

DiscretizedKernel reduce_full_state(const GraphState& state, std::size_t v, const QuadratureGrid& grid) {
  check_oracle_input(state, v, grid);
  const Eigen::MatrixXcd amp = weighted_amplitudes(state, v, grid);
  // rho(x, x') = sum_rest psi(x, rest) conj(psi(x', rest)); real for this state family.
  const Eigen::MatrixXcd rho = amp * amp.adjoint();
  Eigen::MatrixXd b = rho.real();
  // Symmetrize from the lower triangle so B is exactly symmetric.
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index i = j + 1; i < b.rows(); ++i) b(j, i) = b(i, j);
  return {std::move(b), grid, KernelSpec(state.alpha(), kappa(state.graph(), v))};
}

NumericResult alternating_maximization(const GraphState& state, std::size_t v,
                                       const QuadratureGrid& grid, double tol,
                                       std::size_t max_iterations) {
  const std::size_t n = state.graph().size();
  if (n < 2 || n > kMaxOracleVertices)
    throw std::invalid_argument("alternating maximization needs a graph with 2 or 3 vertices");
  check_oracle_input(state, v, grid);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const Eigen::MatrixXcd amp = weighted_amplitudes(state, v, grid);
  const Eigen::Index m = amp.rows();

  // Deterministic starts; the second is used only if the first has no overlap with psi.
  auto start = [m](int attempt) {
    Eigen::VectorXcd u(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double ramp = 1.0 + static_cast<double>(i + 1) / static_cast<double>(m);
      u(i) = attempt == 0 ? ramp : ((i % 2 == 0) ? ramp : -ramp);
    }
    return Eigen::VectorXcd(u.normalized());
  };

  NumericResult result;
  result.grid_size = grid.size();
  Eigen::VectorXcd u = start(0);
  Eigen::VectorXcd w = amp.transpose() * u.conjugate();
  if (w.norm() < 1e-150) {
    u = start(1);
    w = amp.transpose() * u.conjugate();
    if (w.norm() < 1e-150) throw ConvergenceError("both start vectors are orthogonal to the state", 0.0);
  }

  double lambda = w.squaredNorm();
  result.iterates.push_back(lambda);
  w /= w.norm();
  double change = std::numeric_limits<double>::infinity();
  for (std::size_t sweep = 0; sweep < max_iterations; ++sweep) {
    ++result.iterations;
    // phi_v <- normalize(int psi conj(phi_rest))
    Eigen::VectorXcd t = amp * w.conjugate();
    const double after_v = t.squaredNorm();
    u = t / std::sqrt(after_v);
    result.iterates.push_back(after_v);
    // phi_rest <- normalize(int psi conj(phi_v))
    t = amp.transpose() * u.conjugate();
    const double after_rest = t.squaredNorm();
    w = t / std::sqrt(after_rest);
    result.iterates.push_back(after_rest);

    change = std::abs(after_rest - lambda);
    lambda = after_rest;
    if (change < tol) {
      result.converged = true;
      break;
    }
  }
  if (!result.converged) throw ConvergenceError("alternating maximization did not settle", change);

  result.lambda_max_numeric = lambda;
  result.top_eigenvalues = {lambda};
  result.residual = change;
  return result;
}

}  // namespace cvge
