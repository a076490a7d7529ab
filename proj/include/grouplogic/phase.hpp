#pragma once

#include <span>
#include <string>
#include <vector>

#include "grouplogic/groupoid.hpp"

namespace grouplogic {

/// Logarithmic phase data: one real value S(γ) per morphism, expected to
/// satisfy S(β∘α) = S(β) + S(α) and S(α⁻¹) = -S(α). The measure term picks
/// up the factor e^{iS(γ)}.
struct PhaseAction {
  GroupoidPtr g;
  std::vector<double> values;

  double operator()(Idx m) const { return values[m]; }
};

enum class PhaseLaw { Additivity, AntiSymmetry };

struct PhaseViolation {
  PhaseLaw law;
  Idx alpha = kNoIdx;
  Idx beta = kNoIdx;  // the second morphism for additivity checks
  double deviation = 0.0;
};

struct PhaseValidation {
  std::vector<PhaseViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks both logarithmic laws over every composable pair / every morphism.
/// Comparisons are float-based, so a tolerance applies.
PhaseValidation validate_phase(const FiniteGroupoid& g,
                               std::span<const double> values,
                               double tol = 1e-12);

/// S(γ) = φ(t(γ)) - φ(s(γ)) for an object potential φ. Always satisfies the
/// logarithmic laws and vanishes on isotropy morphisms.
PhaseAction phase_from_potential(GroupoidPtr g, std::span<const double> phi);

PhaseAction zero_phase(GroupoidPtr g);

/// Wraps raw per-morphism values, validating first. Throws Error(Measure)
/// with the first violated law on failure.
PhaseAction make_phase(GroupoidPtr g, std::vector<double> values,
                       double tol = 1e-12);

}  // namespace grouplogic
