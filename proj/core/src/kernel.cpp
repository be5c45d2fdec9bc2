#include "cvge/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvge {

double kernel_value(const KernelSpec& spec, double x, double x2) {
  const double a = spec.alpha();
  const double d = x - x2;
  return std::sqrt(a / std::numbers::pi) *
         std::exp(-spec.kappa() * d * d / (4.0 * a) - 0.5 * a * (x * x + x2 * x2));
}

double minimum_extent(double alpha) { return 8.0 / std::sqrt(alpha); }
double default_extent(double alpha) { return 10.0 / std::sqrt(alpha); }

DiscretizedKernel discretize(const KernelSpec& spec, const QuadratureGrid& grid) {
  const double needed = minimum_extent(spec.alpha());
  // Allow for the rounding in extent = mult / sqrt(alpha).
  if (grid.extent < needed * (1.0 - 1e-12))
    throw std::invalid_argument("grid extent " + std::to_string(grid.extent) +
                                " is below the minimum " + std::to_string(needed) +
                                " for alpha = " + std::to_string(spec.alpha()));
  const auto m = static_cast<Eigen::Index>(grid.size());
  Eigen::VectorXd sqrt_w(m);
  for (Eigen::Index i = 0; i < m; ++i) sqrt_w(i) = std::sqrt(grid.weights[static_cast<std::size_t>(i)]);

  Eigen::MatrixXd b(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double xj = grid.nodes[static_cast<std::size_t>(j)];
    for (Eigen::Index i = j; i < m; ++i) {
      const double value = sqrt_w(i) * sqrt_w(j) * kernel_value(spec, grid.nodes[static_cast<std::size_t>(i)], xj);
      b(i, j) = value;
      b(j, i) = value;
    }
  }
  return {std::move(b), grid, spec};
}

double eigenfunction_residual(const KernelSpec& spec, double beta, const QuadratureGrid& grid) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  const DiscretizedKernel dk = discretize(spec, grid);
  const auto m = static_cast<Eigen::Index>(grid.size());
  Eigen::VectorXd u(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double x = grid.nodes[static_cast<std::size_t>(i)];
    u(i) = std::sqrt(grid.weights[static_cast<std::size_t>(i)]) * std::exp(-beta * x * x);
  }
  const Eigen::VectorXd tu = dk.matrix * u;
  const double norm2 = u.squaredNorm();
  const double rayleigh = u.dot(tu) / norm2;
  return (tu - rayleigh * u).norm() / std::sqrt(norm2);
}

double purity_numeric(const KernelSpec& spec, const QuadratureGrid& grid) {
  // Tr(B^2) for symmetric B is the squared Frobenius norm.
  return discretize(spec, grid).matrix.squaredNorm();
}

}  // namespace cvge
