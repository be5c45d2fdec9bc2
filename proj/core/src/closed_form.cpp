#include "cvge/closed_form.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace cvge {

KernelSpec::KernelSpec(double alpha, double kappa) : alpha_(alpha), kappa_(kappa) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be a finite positive number");
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("kappa must be a finite non-negative number");
}

double KernelSpec::root() const noexcept { return std::sqrt(alpha_ * alpha_ + kappa_); }

double KernelSpec::denominator() const noexcept {
  const double s = alpha_ + root();
  return s * s;
}

double lambda_max(const KernelSpec& spec) {
  return 2.0 * spec.alpha() / (spec.alpha() + spec.root());
}

double lambda_n(const KernelSpec& spec, std::size_t n) {
  if (spec.kappa() == 0.0) return n == 0 ? 1.0 : 0.0;
  const double ratio = spec.kappa() / spec.denominator();
  return lambda_max(spec) * std::pow(ratio, static_cast<double>(n));
}

double lambda_max_kappa_over_alpha(const KernelSpec& spec) {
  return 2.0 / (1.0 + std::sqrt(1.0 + spec.kappa() / spec.alpha()));
}

double entanglement(const KernelSpec& spec) {
  const double s = spec.alpha() + spec.root();
  return spec.kappa() / (s * s);
}

Spectrum spectrum(const KernelSpec& spec, std::size_t count) {
  if (count == 0) throw std::invalid_argument("spectrum count must be at least 1");
  Spectrum out;
  out.ratio = spec.kappa() / spec.denominator();
  out.values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.values.push_back(lambda_n(spec, n));
  return out;
}

double purity(const KernelSpec& spec) {
  const double d = spec.denominator();
  return 2.0 * spec.alpha() * std::sqrt(d) / (d + spec.kappa());
}

EntanglementReport profile(const GraphState& state, Provenance provenance) {
  const Graph& g = state.graph();
  EntanglementReport report;
  report.alpha = state.alpha();
  report.n = g.size();
  report.provenance = std::move(provenance);
  report.vertices.reserve(g.size());

  // Equal kappa must give bit-identical values, so evaluate each distinct kappa once.
  std::map<double, std::pair<double, double>> cache;
  for (std::size_t v = 0; v < g.size(); ++v) {
    VertexRecord rec;
    rec.id = v;
    rec.degree = neighbour_count(g, v);
    rec.kappa = kappa(g, v);
    auto it = cache.find(rec.kappa);
    if (it == cache.end()) {
      const KernelSpec spec(state.alpha(), rec.kappa);
      it = cache.emplace(rec.kappa, std::pair{lambda_max(spec), entanglement(spec)}).first;
    }
    rec.lambda_max = it->second.first;
    rec.entanglement = it->second.second;
    report.vertices.push_back(rec);
  }
  return report;
}

}  // namespace cvge
