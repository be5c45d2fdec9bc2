#pragma once

#include <cstddef>

#include "cvge/eigensolver.hpp"
#include "cvge/graph.hpp"
#include "cvge/kernel.hpp"

namespace cvge {

/// Largest graph the tensor-product oracles accept; the tensor has grid.size()^N entries.
inline constexpr std::size_t kMaxOracleVertices = 3;

/// Reduced density matrix of vertex v obtained by integrating |psi><psi| over every other
/// coordinate with tensor Gauss-Legendre quadrature, where
///   psi(x) = (alpha/pi)^(N/4) exp(-alpha sum x_j^2 / 2 + i sum_{j<k} a_jk x_j x_k).
/// The result uses the same sqrt(w_i w_j) weighting as discretize(), so the two matrices
/// are directly comparable. Throws std::invalid_argument for N > 3, an undersized extent,
/// or v out of range.
DiscretizedKernel reduce_full_state(const GraphState& state, std::size_t v, const QuadratureGrid& grid);

/// Maximizes |<psi | phi_v (x) phi_rest>|^2 by alternately solving the two stationarity
/// conditions for phi_v and phi_rest on the tensor grid. Each half-step can only increase
/// the overlap; `iterates` records it after every half-step. Requires N in {2, 3}.
/// Throws ConvergenceError if successive overlaps have not settled below tol after
/// max_iterations sweeps.
NumericResult alternating_maximization(const GraphState& state, std::size_t v,
                                       const QuadratureGrid& grid, double tol,
                                       std::size_t max_iterations = 50000);

}  // namespace cvge
