#pragma once

#include <Eigen/Dense>

#include "cvge/closed_form.hpp"
#include "cvge/quadrature.hpp"

namespace cvge {

/// Reduced density kernel of one oscillator:
///   K(x, x2) = sqrt(alpha/pi) exp(-kappa (x - x2)^2 / (4 alpha) - alpha (x^2 + x2^2) / 2).
/// The sqrt(alpha/pi) prefactor gives unit trace.
double kernel_value(const KernelSpec& spec, double x, double x2);

/// Smallest admissible truncation half-width, 8 / sqrt(alpha).
double minimum_extent(double alpha);
/// Default truncation half-width, 10 / sqrt(alpha).
double default_extent(double alpha);

/// Nystrom discretization B_ij = sqrt(w_i w_j) K(x_i, x_j) of the integral operator.
/// Eigenvectors u of B map back to eigenfunction samples phi(x_i) = u_i / sqrt(w_i).
struct DiscretizedKernel {
  Eigen::MatrixXd matrix;
  QuadratureGrid grid;
  KernelSpec spec;
};

/// Throws std::invalid_argument when grid.extent < minimum_extent(alpha).
DiscretizedKernel discretize(const KernelSpec& spec, const QuadratureGrid& grid);

/// Relative residual |T phi - r phi| / |phi| of the Gaussian trial function exp(-beta x^2),
/// with r its Rayleigh quotient, measured in the quadrature-weighted norm.
double eigenfunction_residual(const KernelSpec& spec, double beta, const QuadratureGrid& grid);

/// Tr rho^2 by double quadrature of K(x, x')^2.
double purity_numeric(const KernelSpec& spec, const QuadratureGrid& grid);

}  // namespace cvge
