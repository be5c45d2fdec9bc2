#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvge/graph.hpp"

namespace cvge {

/// The two numbers that fix the one-oscillator reduced density kernel:
/// oscillator width alpha and vertex coupling strength kappa.
class KernelSpec {
 public:
  /// Throws std::invalid_argument unless alpha > 0 and kappa >= 0, both finite.
  KernelSpec(double alpha, double kappa);

  double alpha() const noexcept { return alpha_; }
  double kappa() const noexcept { return kappa_; }

  /// sqrt(alpha^2 + kappa)
  double root() const noexcept;
  /// D = kappa + 2 alpha^2 + 2 alpha sqrt(alpha^2 + kappa) = (alpha + sqrt(alpha^2 + kappa))^2
  double denominator() const noexcept;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

 private:
  double alpha_;
  double kappa_;
};

/// Leading eigenvalues of the reduced density operator. Successive values shrink by
/// `ratio` = kappa / D.
struct Spectrum {
  std::vector<double> values;
  double ratio = 0.0;

  std::size_t count() const noexcept { return values.size(); }
};

/// n-th eigenvalue 2 alpha kappa^n / D^(n + 1/2). For kappa = 0 this is 1 at n = 0 and 0 otherwise.
double lambda_n(const KernelSpec& spec, std::size_t n);

/// Largest eigenvalue 2 alpha / sqrt(D) = 2 alpha / (alpha + sqrt(alpha^2 + kappa)); lies in (0, 1].
double lambda_max(const KernelSpec& spec);

/// The shorthand 2 / (1 + sqrt(1 + kappa/alpha)). It coincides with lambda_max only at
/// alpha = 1 and is kept solely so validation runs can display the discrepancy.
double lambda_max_kappa_over_alpha(const KernelSpec& spec);

/// Geometric measure 1 - lambda_max, evaluated as kappa / (alpha + sqrt(alpha^2 + kappa))^2
/// so small kappa does not lose digits to cancellation.
double entanglement(const KernelSpec& spec);

/// First `count` eigenvalues in decreasing order. Throws std::invalid_argument if count == 0.
Spectrum spectrum(const KernelSpec& spec, std::size_t count);

/// Tr rho^2 = sum of squared eigenvalues = 2 alpha sqrt(D) / (D + kappa).
double purity(const KernelSpec& spec);

struct NumericDiagnostics {
  double lambda_max = 0.0;
  double deviation = 0.0;
  std::size_t grid_size = 0;
};

struct VertexRecord {
  std::size_t id = 0;
  std::size_t degree = 0;  // nonzero couplings; equals graph degree for binary weights
  double kappa = 0.0;
  double lambda_max = 0.0;
  double entanglement = 0.0;
  std::optional<NumericDiagnostics> numeric;
};

struct Provenance {
  std::string source;
  std::optional<std::uint64_t> seed;
};

struct EntanglementReport {
  double alpha = 1.0;
  std::size_t n = 0;
  Provenance provenance;
  std::vector<VertexRecord> vertices;  // ascending vertex id
};

/// Closed-form single-oscillator entanglement of every vertex against the rest.
EntanglementReport profile(const GraphState& state, Provenance provenance = {});

}  // namespace cvge
