#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cvge/kernel.hpp"

namespace cvge {

struct NumericResult {
  double lambda_max_numeric = 0.0;
  std::vector<double> top_eigenvalues;  // decreasing
  double residual = 0.0;                // worst final residual over the returned pairs
  std::size_t grid_size = 0;
  bool converged = false;
  std::size_t iterations = 0;
  std::vector<double> iterates;  // lambda after each sweep, for iterative fixed-point solvers

  double entanglement_numeric() const noexcept { return 1.0 - lambda_max_numeric; }
};

struct PowerIterationOptions {
  double tolerance = 1e-12;  // on |A v - lambda v| with |v| = 1
  std::size_t max_iterations = 50000;
};

struct EigenPairs {
  std::vector<double> values;
  Eigen::MatrixXd vectors;  // one unit column per value
  std::vector<double> residuals;
  std::size_t iterations = 0;
};

/// Largest k eigenpairs of a symmetric positive semidefinite matrix by power iteration with
/// Hotelling deflation. The start vector is the ramp 1 + (i+1)/n so that it overlaps both
/// even and odd eigenvectors of grid-symmetric operators. Throws ConvergenceError at the cap.
EigenPairs power_deflation(const Eigen::MatrixXd& matrix, std::size_t k,
                           const PowerIterationOptions& options = {});

/// Top k eigenvalues of a discretized kernel. Throws std::invalid_argument if k exceeds the
/// grid size and ConvergenceError on stalls.
NumericResult top_eigenvalues(const DiscretizedKernel& dk, std::size_t k, double tol = 1e-12);

/// Node-doubling refinement for the Nystrom estimate of lambda_max.
struct GridPolicy {
  double extent_multiplier = 10.0;  // extent = multiplier / sqrt(alpha); must be >= 8
  std::size_t initial_size = 256;
  std::size_t max_size = 4096;
  double tolerance = 1e-10;  // on |delta lambda_max| between successive refinements
  double eigen_tolerance = 1e-12;
  std::size_t eigen_count = 1;
};

/// Nystrom estimate of lambda_max (and entanglement 1 - lambda_max). The returned result
/// belongs to the finer of the two grids whose estimates agreed.
/// Throws ConvergenceError when max_size is reached first.
NumericResult numeric_entanglement(const KernelSpec& spec, const GridPolicy& policy = {});

}  // namespace cvge
