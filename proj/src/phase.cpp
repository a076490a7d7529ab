#include "grouplogic/phase.hpp"

#include <cmath>

namespace grouplogic {

PhaseValidation validate_phase(const FiniteGroupoid& g,
                               std::span<const double> values, double tol) {
  PhaseValidation out;
  if (values.size() != g.morphism_count()) {
    throw_measure("phase must assign a value to every morphism");
  }
  for (const auto& [beta, alpha, comp] : g.composable_triples()) {
    double dev = std::abs(values[comp] - (values[beta] + values[alpha]));
    if (dev > tol)
      out.violations.push_back({PhaseLaw::Additivity, alpha, beta, dev});
  }
  for (Idx m = 0; m < g.morphism_count(); ++m) {
    double dev = std::abs(values[g.inverse(m)] + values[m]);
    if (dev > tol)
      out.violations.push_back({PhaseLaw::AntiSymmetry, m, kNoIdx, dev});
  }
  return out;
}

PhaseAction phase_from_potential(GroupoidPtr g, std::span<const double> phi) {
  if (phi.size() != g->object_count())
    throw_measure("potential must assign a value to every object");
  PhaseAction p{g, std::vector<double>(g->morphism_count())};
  for (Idx m = 0; m < g->morphism_count(); ++m)
    p.values[m] = phi[g->target(m)] - phi[g->source(m)];
  return p;
}

PhaseAction zero_phase(GroupoidPtr g) {
  auto n = g->morphism_count();
  return {std::move(g), std::vector<double>(n, 0.0)};
}

PhaseAction make_phase(GroupoidPtr g, std::vector<double> values, double tol) {
  auto report = validate_phase(*g, values, tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    if (v.law == PhaseLaw::Additivity)
      throw_measure("phase additivity violated at " +
                    g->morphism_label(v.beta) + "∘" +
                    g->morphism_label(v.alpha));
    throw_measure("phase anti-symmetry violated at " +
                  g->morphism_label(v.alpha));
  }
  return {std::move(g), std::move(values)};
}

}  // namespace grouplogic
