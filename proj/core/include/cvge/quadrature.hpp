#pragma once

#include <cstddef>
#include <vector>

namespace cvge {

/// Gauss-Legendre rule on the truncated interval [-extent, extent].
struct QuadratureGrid {
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, summing to 2 * extent
  double extent = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Throws std::invalid_argument for size < 2 or a non-positive extent.
QuadratureGrid build_grid(double extent, std::size_t size);

}  // namespace cvge
