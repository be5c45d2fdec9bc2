#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "cvge/eigensolver.hpp"
#include "cvge/error.hpp"
#include "cvge/kernel.hpp"
#include "cvge/quadrature.hpp"

namespace cvge {
namespace {

const std::vector<double> kAlphas{0.5, 1.0, 2.0, 4.0};
const std::vector<double> kKappas{0.0, 1.0, 2.0, 3.0, 5.0, 8.0, 9.0};

QuadratureGrid default_grid(double alpha, std::size_t size) { return build_grid(default_extent(alpha), size); }

TEST(BuildGrid, TwoPointRule) {
  const QuadratureGrid g = build_grid(1.0, 2);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_NEAR(g.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(g.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(g.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(g.weights[1], 1.0, 1e-15);
}

TEST(BuildGrid, StructuralInvariants) {
  for (std::size_t size : {2u, 3u, 7u, 64u, 255u, 256u, 1024u, 4096u}) {
    const QuadratureGrid g = build_grid(8.0, size);
    ASSERT_EQ(g.size(), size);
    double sum = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      EXPECT_EQ(g.nodes[i], -g.nodes[size - 1 - i]);
      EXPECT_GT(g.weights[i], 0.0);
      if (i > 0) EXPECT_LT(g.nodes[i - 1], g.nodes[i]);
      sum += g.weights[i];
    }
    EXPECT_NEAR(sum, 16.0, 1e-12) << size;
    EXPECT_GT(g.nodes.front(), -8.0);
    EXPECT_LT(g.nodes.back(), 8.0);
  }
}

TEST(BuildGrid, PolynomialExactness) {
  // An m-point rule integrates x^j exactly for j <= 2m - 1.
  const std::size_t m = 6;
  const double l = 1.5;
  const QuadratureGrid g = build_grid(l, m);
  for (int j = 0; j <= 2 * static_cast<int>(m) - 1; ++j) {
    double q = 0.0;
    for (std::size_t i = 0; i < m; ++i) q += g.weights[i] * std::pow(g.nodes[i], j);
    const double exact = j % 2 ? 0.0 : 2.0 * std::pow(l, j + 1) / (j + 1);
    EXPECT_NEAR(q, exact, 1e-13 * std::max(1.0, exact)) << j;
  }
}

TEST(BuildGrid, GaussianIntegral) {
  const QuadratureGrid g = build_grid(10.0, 128);
  double q = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) q += g.weights[i] * std::exp(-g.nodes[i] * g.nodes[i]);
  EXPECT_NEAR(q, std::sqrt(std::numbers::pi), 1e-14);
}

TEST(BuildGrid, Errors) {
  EXPECT_THROW(build_grid(1.0, 1), std::invalid_argument);
  EXPECT_THROW(build_grid(0.0, 8), std::invalid_argument);
  EXPECT_THROW(build_grid(-1.0, 8), std::invalid_argument);
}

TEST(KernelValue, Examples) {
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  for (double k : {0.0, 1.0, 7.0}) EXPECT_NEAR(kernel_value(KernelSpec(1, k), 0, 0), inv_sqrt_pi, 1e-15);
  EXPECT_NEAR(kernel_value(KernelSpec(1, 0), 1, -1), inv_sqrt_pi * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(kernel_value(KernelSpec(1, 0), 1, -1), 0.2075537, 1e-7);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-4.0, 4.0);
  for (int t = 0; t < 200; ++t) {
    const KernelSpec s(0.2 + std::abs(x(rng)), std::abs(x(rng)) * 3);
    const double a = x(rng);
    const double b = x(rng);
    EXPECT_EQ(kernel_value(s, a, b), kernel_value(s, b, a));
  }
}

TEST(KernelValue, UnitTraceByQuadrature) {
  for (double a : kAlphas)
    for (double k : kKappas) {
      const KernelSpec s(a, k);
      const QuadratureGrid g = default_grid(a, 256);
      double trace = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) trace += g.weights[i] * kernel_value(s, g.nodes[i], g.nodes[i]);
      EXPECT_NEAR(trace, 1.0, 1e-12);
    }
}

TEST(Discretize, Examples) {
  const auto pure = discretize(KernelSpec(1, 0), build_grid(10, 128));
  EXPECT_NEAR(top_eigenvalues(pure, 1).lambda_max_numeric, 1.0, 1e-10);

  const auto dk = discretize(KernelSpec(1, 1), build_grid(10, 256));
  EXPECT_NEAR(dk.matrix.trace(), 1.0, 1e-10);
  EXPECT_NEAR(top_eigenvalues(dk, 1).lambda_max_numeric, 0.8284271247, 1e-9);
  EXPECT_EQ(dk.matrix, dk.matrix.transpose());
  EXPECT_EQ(dk.spec, KernelSpec(1, 1));
}

TEST(Discretize, EnforcesMinimumExtent) {
  EXPECT_THROW(discretize(KernelSpec(1, 1), build_grid(7.9, 64)), std::invalid_argument);
  EXPECT_THROW(discretize(KernelSpec(0.25, 1), build_grid(10.0, 64)), std::invalid_argument);  // needs 16
  EXPECT_NO_THROW(discretize(KernelSpec(4, 1), build_grid(4.0, 64)));
  EXPECT_NO_THROW(discretize(KernelSpec(2, 1), build_grid(8.0 / std::sqrt(2.0), 64)));
}

TEST(Discretize, TracePreservation) {
  for (double a : kAlphas)
    for (double k : kKappas)
      for (std::size_t size : {64u, 256u}) {
        const auto dk = discretize(KernelSpec(a, k), build_grid(minimum_extent(a), size));
        EXPECT_LT(std::abs(dk.matrix.trace() - 1.0), 1e-11);
      }
}

// Random symmetric PSD matrix with a prescribed, well separated spectrum.
Eigen::MatrixXd random_psd(std::size_t n, double ratio, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = normal(rng);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::pow(ratio, static_cast<double>(i));
  return q * d.asDiagonal() * q.transpose();
}

TEST(PowerDeflation, AgreesWithDenseEigensolver) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Eigen::MatrixXd m = random_psd(40, 0.5 + 0.05 * static_cast<double>(seed), seed);
    const EigenPairs pairs = power_deflation(m, 6);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const Eigen::VectorXd ref = es.eigenvalues().reverse();
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_NEAR(pairs.values[j], ref(static_cast<Eigen::Index>(j)), 1e-11);
      EXPECT_LT(pairs.residuals[j], 1e-12);
      const Eigen::VectorXd v = pairs.vectors.col(static_cast<Eigen::Index>(j));
      EXPECT_NEAR(v.norm(), 1.0, 1e-12);
      EXPECT_LT((m * v - pairs.values[j] * v).norm(), 1e-10);
    }
  }
}

TEST(PowerDeflation, FindsOddEigenvectorsOfSymmetricKernel) {
  // Odd eigenfunctions are orthogonal to any grid-symmetric start vector.
  const auto dk = discretize(KernelSpec(1, 3), build_grid(10, 128));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dk.matrix);
  const Eigen::VectorXd ref = es.eigenvalues().reverse();
  const EigenPairs pairs = power_deflation(dk.matrix, 5);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(pairs.values[j], ref(static_cast<Eigen::Index>(j)), 1e-12);
}

TEST(PowerDeflation, Errors) {
  const Eigen::MatrixXd m = random_psd(10, 0.9, 1);
  EXPECT_THROW(power_deflation(m, 0), std::invalid_argument);
  EXPECT_THROW(power_deflation(m, 11), std::invalid_argument);
  EXPECT_THROW(power_deflation(Eigen::MatrixXd(3, 4), 1), std::invalid_argument);
  PowerIterationOptions tight;
  tight.max_iterations = 3;
  try {
    (void)power_deflation(m, 1, tight);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.last_residual(), 0.0);
  }
}

TEST(TopEigenvalues, Examples) {
  const QuadratureGrid grid = build_grid(10, 256);
  const double q = 3.0 - 2.0 * std::sqrt(2.0);
  const double l0 = 2.0 / (1.0 + std::sqrt(2.0));
  const NumericResult r = top_eigenvalues(discretize(KernelSpec(1, 1), grid), 3);
  ASSERT_EQ(r.top_eigenvalues.size(), 3u);
  EXPECT_NEAR(r.top_eigenvalues[0], l0, 1e-10);
  EXPECT_NEAR(r.top_eigenvalues[1], l0 * q, 1e-10);
  EXPECT_NEAR(r.top_eigenvalues[2], l0 * q * q, 1e-10);
  EXPECT_NEAR(r.top_eigenvalues[2], 0.0243866, 1e-7);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.grid_size, 256u);
  EXPECT_LT(r.residual, 1e-12);

  const NumericResult pure = top_eigenvalues(discretize(KernelSpec(1, 0), grid), 2);
  EXPECT_NEAR(pure.top_eigenvalues[0], 1.0, 1e-9);
  EXPECT_NEAR(pure.top_eigenvalues[1], 0.0, 1e-9);

  const NumericResult twelve = top_eigenvalues(discretize(KernelSpec(1, 3), grid), 12);
  double sum = 0.0;
  for (double v : twelve.top_eigenvalues) sum += v;
  // Geometric tail: lambda_0 q^12 / (1 - q) with q = 1/3 is about 1.9e-6.
  EXPECT_NEAR(sum, 1.0, (2.0 / 3.0) * std::pow(1.0 / 3.0, 12) / (2.0 / 3.0) + 1e-9);
  EXPECT_NEAR(sum, 1.0, 1e-5);

  EXPECT_THROW(top_eigenvalues(discretize(KernelSpec(1, 1), build_grid(10, 8)), 9), std::invalid_argument);
}

TEST(TopEigenvalues, OrderedAndBounded) {
  for (double a : kAlphas)
    for (double k : kKappas) {
      const NumericResult r = top_eigenvalues(discretize(KernelSpec(a, k), default_grid(a, 128)), 6);
      for (std::size_t j = 0; j < r.top_eigenvalues.size(); ++j) {
        EXPECT_GE(r.top_eigenvalues[j], -1e-10);
        EXPECT_LE(r.top_eigenvalues[j], 1.0 + 1e-10);
        if (j > 0) EXPECT_LE(r.top_eigenvalues[j], r.top_eigenvalues[j - 1]);
      }
    }
}

TEST(Nystrom, OracleAgreementAt256Nodes) {
  for (double a : kAlphas)
    for (double k : kKappas) {
      const NumericResult r = top_eigenvalues(discretize(KernelSpec(a, k), default_grid(a, 256)), 1);
      EXPECT_LT(std::abs(r.lambda_max_numeric - 2 * a / (a + std::sqrt(a * a + k))), 1e-8)
          << "alpha=" << a << " kappa=" << k;
    }
}

TEST(Nystrom, GeometricRatio) {
  for (double a : kAlphas)
    for (double k : kKappas) {
      if (k == 0.0) continue;
      const KernelSpec spec(a, k);
      const double q = k / spec.denominator();
      const NumericResult r = top_eigenvalues(discretize(spec, default_grid(a, 256)), 5);
      for (std::size_t n = 0; n <= 3; ++n)
        EXPECT_NEAR(r.top_eigenvalues[n + 1] / r.top_eigenvalues[n], q, 1e-6) << a << " " << k << " " << n;
    }
}

TEST(NumericEntanglement, Examples) {
  const NumericResult r1 = numeric_entanglement(KernelSpec(1, 1));
  EXPECT_NEAR(r1.entanglement_numeric(), 3.0 - 2.0 * std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(r1.entanglement_numeric(), 0.1715729, 1e-7);
  EXPECT_TRUE(r1.converged);
  EXPECT_EQ(r1.grid_size, 512u);

  const NumericResult r2 = numeric_entanglement(KernelSpec(4, 9));
  EXPECT_NEAR(r2.entanglement_numeric(), 1.0 / 9.0, 1e-8);
  const double shorthand_e = 1.0 - 2.0 / (1.0 + std::sqrt(1.0 + 9.0 / 4.0));
  EXPECT_GT(std::abs(r2.entanglement_numeric() - shorthand_e), 1e-2);

  EXPECT_NEAR(numeric_entanglement(KernelSpec(1, 0)).entanglement_numeric(), 0.0, 1e-9);
}

TEST(NumericEntanglement, PolicyErrors) {
  GridPolicy never;
  never.tolerance = 0.0;
  never.initial_size = 16;
  never.max_size = 64;
  EXPECT_THROW(numeric_entanglement(KernelSpec(1, 1), never), ConvergenceError);

  GridPolicy narrow;
  narrow.extent_multiplier = 5.0;
  EXPECT_THROW(numeric_entanglement(KernelSpec(1, 1), narrow), std::invalid_argument);

  GridPolicy inverted;
  inverted.initial_size = 1024;
  inverted.max_size = 512;
  EXPECT_THROW(numeric_entanglement(KernelSpec(1, 1), inverted), std::invalid_argument);
}

TEST(EigenfunctionResidual, Examples) {
  const QuadratureGrid grid = build_grid(10, 256);
  EXPECT_LT(eigenfunction_residual(KernelSpec(1, 1), std::sqrt(2.0) / 2.0, grid), 1e-8);
  EXPECT_GT(eigenfunction_residual(KernelSpec(1, 1), 0.5, grid), 1e-2);
  EXPECT_LT(eigenfunction_residual(KernelSpec(1, 0), 0.5, grid), 1e-8);
  EXPECT_THROW(eigenfunction_residual(KernelSpec(1, 1), 0.0, grid), std::invalid_argument);
}

TEST(EigenfunctionResidual, Adjudication) {
  for (double a : kAlphas)
    for (double k : kKappas) {
      if (k == 0.0) continue;
      const double true_beta = std::sqrt(a * a + k) / 2.0;
      const double linear_beta = k / (2.0 * a);
      ASSERT_GT(std::abs(true_beta - linear_beta), 0.05) << "coincidence region";
      const QuadratureGrid grid = default_grid(a, 256);
      EXPECT_LT(eigenfunction_residual(KernelSpec(a, k), true_beta, grid), 1e-6);
      EXPECT_GT(eigenfunction_residual(KernelSpec(a, k), linear_beta, grid), 1e-3) << a << " " << k;
    }
}

TEST(PurityNumeric, Examples) {
  EXPECT_NEAR(purity_numeric(KernelSpec(1, 1), build_grid(10, 256)), 1.0 / std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(purity_numeric(KernelSpec(1, 0), build_grid(10, 256)), 1.0, 1e-9);
  EXPECT_NEAR(purity_numeric(KernelSpec(4, 9), build_grid(5, 256)), 0.8, 1e-8);
}

TEST(PurityNumeric, MatchesClosedForm) {
  for (double a : kAlphas)
    for (double k : kKappas) {
      const KernelSpec s(a, k);
      EXPECT_NEAR(purity_numeric(s, default_grid(a, 256)), purity(s), 1e-10);
    }
}

}  // namespace
}  // namespace cvge
