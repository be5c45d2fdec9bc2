#include "cvge/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cvge/error.hpp"

namespace cvge {

namespace {

void orthogonalize(Eigen::VectorXd& v, const Eigen::MatrixXd& basis, Eigen::Index count) {
  for (Eigen::Index c = 0; c < count; ++c) v -= basis.col(c).dot(v) * basis.col(c);
}

}  // namespace

EigenPairs power_deflation(const Eigen::MatrixXd& matrix, std::size_t k,
                           const PowerIterationOptions& options) {
  const Eigen::Index n = matrix.rows();
  if (matrix.cols() != n) throw std::invalid_argument("power_deflation needs a square matrix");
  if (k == 0 || k > static_cast<std::size_t>(n))
    throw std::invalid_argument("requested " + std::to_string(k) + " eigenvalues of a " +
                                std::to_string(n) + "x" + std::to_string(n) + " matrix");

  EigenPairs out;
  out.vectors = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(k));
  Eigen::MatrixXd work = matrix;

  for (std::size_t j = 0; j < k; ++j) {
    const auto found = static_cast<Eigen::Index>(j);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = 1.0 + static_cast<double>(i + 1) / static_cast<double>(n);
    orthogonalize(v, out.vectors, found);
    if (v.norm() < 1e-8) {
      v = Eigen::VectorXd::Unit(n, found);
      orthogonalize(v, out.vectors, found);
    }
    v.normalize();

    double lambda = 0.0;
    double residual = 0.0;
    bool done = false;
    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
      ++out.iterations;
      Eigen::VectorXd w = work * v;
      lambda = v.dot(w);
      residual = (w - lambda * v).norm();
      const double wnorm = w.norm();
      if (residual < options.tolerance || wnorm < 1e-300) {
        done = true;
        break;
      }
      v = w / wnorm;
      orthogonalize(v, out.vectors, found);
      v.normalize();
    }
    if (!done)
      throw ConvergenceError("power iteration stalled on eigenvalue " + std::to_string(j), residual);

    out.values.push_back(lambda);
    out.residuals.push_back(residual);
    out.vectors.col(found) = v;
    work.noalias() -= lambda * v * v.transpose();
  }
  return out;
}

NumericResult top_eigenvalues(const DiscretizedKernel& dk, std::size_t k, double tol) {
  if (k > dk.grid.size())
    throw std::invalid_argument("cannot extract " + std::to_string(k) + " eigenvalues from a " +
                                std::to_string(dk.grid.size()) + "-node grid");
  PowerIterationOptions options;
  options.tolerance = tol;
  const EigenPairs pairs = power_deflation(dk.matrix, k, options);

  NumericResult result;
  result.top_eigenvalues = pairs.values;
  // Deflation returns them in discovery order, which is decreasing up to roundoff.
  std::sort(result.top_eigenvalues.begin(), result.top_eigenvalues.end(), std::greater<>());
  result.lambda_max_numeric = result.top_eigenvalues.front();
  result.residual = *std::max_element(pairs.residuals.begin(), pairs.residuals.end());
  result.grid_size = dk.grid.size();
  result.iterations = pairs.iterations;
  result.converged = true;
  return result;
}

NumericResult numeric_entanglement(const KernelSpec& spec, const GridPolicy& policy) {
  if (policy.initial_size < 2 || policy.initial_size > policy.max_size)
    throw std::invalid_argument("grid policy needs 2 <= initial_size <= max_size");
  const double extent = policy.extent_multiplier / std::sqrt(spec.alpha());

  auto solve = [&](std::size_t size) {
    return top_eigenvalues(discretize(spec, build_grid(extent, size)), policy.eigen_count,
                           policy.eigen_tolerance);
  };

  NumericResult previous = solve(policy.initial_size);
  double delta = std::numeric_limits<double>::infinity();
  for (std::size_t size = policy.initial_size * 2; size <= policy.max_size; size *= 2) {
    NumericResult current = solve(size);
    delta = std::abs(current.lambda_max_numeric - previous.lambda_max_numeric);
    if (delta < policy.tolerance) {
      current.converged = true;
      return current;
    }
    previous = std::move(current);
  }
  throw ConvergenceError("grid refinement reached " + std::to_string(policy.max_size) +
                             " nodes without lambda_max settling",
                         delta);
}

}  // namespace cvge
