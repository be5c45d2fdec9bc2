#include "cvge/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvge {

namespace {

// Legendre P_n(x) and its derivative via the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = pk;
  }
  const double dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureGrid build_grid(double extent, std::size_t size) {
  if (size < 2) throw std::invalid_argument("quadrature grid needs at least 2 nodes");
  if (!(extent > 0.0) || !std::isfinite(extent))
    throw std::invalid_argument("quadrature extent must be a finite positive number");

  QuadratureGrid grid;
  grid.extent = extent;
  grid.nodes.assign(size, 0.0);
  grid.weights.assign(size, 0.0);

  const std::size_t half = (size + 1) / 2;
  const double n = static_cast<double>(size);
  for (std::size_t i = 0; i < half; ++i) {
    // Largest roots first; Newton from the Tricomi-style initial guess.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre(size, x);
      dp = d;
      const double step = p / d;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    dp = legendre(size, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Exact zero at the center of odd rules.
    if (2 * i + 1 == size) x = 0.0;
    grid.nodes[size - 1 - i] = extent * x;
    grid.nodes[i] = -extent * x;
    grid.weights[size - 1 - i] = extent * w;
    grid.weights[i] = extent * w;
  }
  return grid;
}

}  // namespace cvge
