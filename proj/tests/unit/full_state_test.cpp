#include <gtest/gtest.h>

#include <cmath>

#include "cvge/error.hpp"
#include "cvge/full_state.hpp"

namespace cvge {
namespace {

// Every labelled binary graph on 2 and 3 vertices.
std::vector<Graph> small_binary_graphs() {
  std::vector<Graph> graphs{Graph(2), generate(GraphGenSpec::path(2))};
  for (unsigned mask = 0; mask < 8; ++mask) {
    Graph g(3);
    if (mask & 1u) g.set_edge(0, 1);
    if (mask & 2u) g.set_edge(1, 2);
    if (mask & 4u) g.set_edge(0, 2);
    graphs.push_back(g);
  }
  return graphs;
}

double top(const DiscretizedKernel& dk) { return top_eigenvalues(dk, 1).lambda_max_numeric; }

TEST(ReduceFullState, SingleEdgeMatchesAnalyticKernelEntrywise) {
  const QuadratureGrid grid = build_grid(10, 64);
  const DiscretizedKernel reduced = reduce_full_state(GraphState(generate(GraphGenSpec::path(2)), 1.0), 0, grid);
  const DiscretizedKernel analytic = discretize(KernelSpec(1, 1), grid);
  EXPECT_LT((reduced.matrix - analytic.matrix).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_EQ(reduced.spec, KernelSpec(1, 1));
  EXPECT_EQ(reduced.matrix, reduced.matrix.transpose());
  EXPECT_NEAR(reduced.matrix.trace(), 1.0, 1e-10);
}

TEST(ReduceFullState, Triangle) {
  const GraphState tri(generate(GraphGenSpec::cycle(3)), 1.0);
  const QuadratureGrid grid = build_grid(10, 64);
  for (std::size_t v = 0; v < 3; ++v) {
    const double lambda = top(reduce_full_state(tri, v, grid));
    EXPECT_NEAR(lambda, 2.0 / (1.0 + std::sqrt(3.0)), 1e-6);
    EXPECT_NEAR(1.0 - lambda, 2.0 - std::sqrt(3.0), 1e-6);
  }
}

TEST(ReduceFullState, EmptyPairIsRankOne) {
  const DiscretizedKernel dk = reduce_full_state(GraphState(Graph(2), 1.0), 0, build_grid(10, 64));
  const NumericResult r = top_eigenvalues(dk, 2);
  EXPECT_NEAR(r.top_eigenvalues[0], 1.0, 1e-10);
  EXPECT_NEAR(r.top_eigenvalues[1], 0.0, 1e-10);
}

TEST(ReduceFullState, WeightedEdgeUsesSquaredCoupling) {
  // Integrating out the partner of a 0.5-weight edge leaves kappa = 0.25, not 0.5.
  Graph g(2);
  g.set_edge(0, 1, 0.5);
  const QuadratureGrid grid = build_grid(10, 64);
  const DiscretizedKernel reduced = reduce_full_state(GraphState(g, 1.0), 1, grid);
  EXPECT_EQ(reduced.spec.kappa(), 0.25);
  EXPECT_LT((reduced.matrix - discretize(KernelSpec(1, 0.25), grid).matrix).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(top(reduced), lambda_max(KernelSpec(1, 0.25)), 1e-9);
  EXPECT_GT(std::abs(top(reduced) - lambda_max(KernelSpec(1, 0.5))), 1e-2);

  Graph mixed(3);
  mixed.set_edge(0, 1, -1.5);
  mixed.set_edge(0, 2, 0.5);
  const double expected = lambda_max(KernelSpec(2.0, 2.25 + 0.25));
  EXPECT_NEAR(top(reduce_full_state(GraphState(mixed, 2.0), 0, build_grid(default_extent(2.0), 64))), expected, 1e-8);
}

TEST(ReduceFullState, SingleVertex) {
  const double lambda = top(reduce_full_state(GraphState(Graph(1), 1.5), 0, build_grid(default_extent(1.5), 64)));
  EXPECT_NEAR(lambda, 1.0, 1e-10);
}

TEST(ReduceFullState, Errors) {
  const QuadratureGrid grid = build_grid(10, 16);
  EXPECT_THROW(reduce_full_state(GraphState(generate(GraphGenSpec::path(4)), 1.0), 0, grid), std::invalid_argument);
  EXPECT_THROW(reduce_full_state(GraphState(Graph(2), 1.0), 2, grid), std::invalid_argument);
  EXPECT_THROW(reduce_full_state(GraphState(Graph(2), 1.0), 0, build_grid(5, 16)), std::invalid_argument);
}

TEST(ReduceFullState, ConsistentWithDegreeClosedForm) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const QuadratureGrid grid = build_grid(default_extent(alpha), 64);
    for (const Graph& g : small_binary_graphs()) {
      const GraphState state(g, alpha);
      for (std::size_t v = 0; v < g.size(); ++v) {
        const double closed = lambda_max(KernelSpec(alpha, static_cast<double>(degree(g, v))));
        EXPECT_NEAR(top(reduce_full_state(state, v, grid)), closed, 1e-6)
            << "alpha=" << alpha << " n=" << g.size() << " v=" << v;
      }
    }
  }
}

TEST(AlternatingMaximization, SingleEdge) {
  const NumericResult r =
      alternating_maximization(GraphState(generate(GraphGenSpec::path(2)), 1.0), 0, build_grid(10, 64), 1e-13);
  EXPECT_NEAR(r.lambda_max_numeric, 2.0 / (1.0 + std::sqrt(2.0)), 1e-7);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.grid_size, 64u);
  for (std::size_t i = 1; i < r.iterates.size(); ++i) EXPECT_GE(r.iterates[i], r.iterates[i - 1]);
  EXPECT_EQ(r.iterates.back(), r.lambda_max_numeric);
}

TEST(AlternatingMaximization, ProductState) {
  const NumericResult r = alternating_maximization(GraphState(Graph(2), 1.0), 1, build_grid(10, 64), 1e-13);
  EXPECT_NEAR(r.lambda_max_numeric, 1.0, 1e-10);
}

TEST(AlternatingMaximization, PathMiddleVertex) {
  const NumericResult r =
      alternating_maximization(GraphState(generate(GraphGenSpec::path(3)), 1.0), 1, build_grid(10, 64), 1e-13);
  EXPECT_NEAR(r.lambda_max_numeric, 2.0 / (1.0 + std::sqrt(3.0)), 1e-6);
}

TEST(AlternatingMaximization, MonotoneAndMatchesReduction) {
  for (double alpha : {0.5, 1.0, 3.0}) {
    const QuadratureGrid grid = build_grid(default_extent(alpha), 48);
    for (const Graph& g : small_binary_graphs()) {
      const GraphState state(g, alpha);
      for (std::size_t v = 0; v < g.size(); ++v) {
        const NumericResult r = alternating_maximization(state, v, grid, 1e-14);
        for (std::size_t i = 1; i < r.iterates.size(); ++i)
          EXPECT_GE(r.iterates[i], r.iterates[i - 1] - 1e-13);  // roundoff over a 48^3 sum
        EXPECT_NEAR(r.lambda_max_numeric, top(reduce_full_state(state, v, grid)), 1e-10);
      }
    }
  }
}

TEST(AlternatingMaximization, Errors) {
  const QuadratureGrid grid = build_grid(10, 16);
  EXPECT_THROW(alternating_maximization(GraphState(Graph(1), 1.0), 0, grid, 1e-10), std::invalid_argument);
  EXPECT_THROW(alternating_maximization(GraphState(Graph(4), 1.0), 0, grid, 1e-10), std::invalid_argument);
  EXPECT_THROW(alternating_maximization(GraphState(Graph(2), 1.0), 0, grid, 0.0), std::invalid_argument);
  EXPECT_THROW(alternating_maximization(GraphState(generate(GraphGenSpec::path(2)), 1.0), 0, grid, 1e-300, 2),
               ConvergenceError);
}

}  // namespace
}  // namespace cvge
