#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grouplogic/groupoid.hpp"

namespace grouplogic {

enum class HaarKind { Counting, Normalized, Custom };

const char* to_string(HaarKind kind);

/// Witness for a failed left-invariance check: fiber_weight(α∘γ) differs
/// from fiber_weight(γ) for this composable pair.
struct HaarViolation {
  Idx alpha = kNoIdx;
  Idx gamma = kNoIdx;
};

/// A groupoid together with an object measure λ and a left Haar system of
/// fiber measures, stored as one positive weight per morphism
/// (fiber_weight(γ) = ν^{t(γ)}({γ})). Derived data (μ, the modular function
/// δ, and the inversion-invariant representative Λ) is computed once at
/// construction and cached; instances are immutable afterwards.
class MeasuredGroupoid {
 public:
  const GroupoidPtr& groupoid_ptr() const { return g_; }
  const FiniteGroupoid& groupoid() const { return *g_; }
  HaarKind haar_kind() const { return kind_; }

  double lambda(Idx obj) const { return lambda_[obj]; }
  std::span<const double> lambda() const { return lambda_; }
  double fiber_weight(Idx m) const { return fiber_weight_[m]; }
  std::span<const double> fiber_weights() const { return fiber_weight_; }

  /// μ(γ) = λ(t(γ)) · fiber_weight(γ).
  double mu(Idx m) const { return mu_[m]; }
  std::span<const double> mu() const { return mu_; }

  /// Modular function δ(γ) = μ(γ)/μ(γ⁻¹) on the support of μ; 1 for
  /// self-inverse morphisms by convention. Off-support morphisms are
  /// flagged: where both μ(γ) and μ(γ⁻¹) vanish the conventional value 1 is
  /// still usable (the morphism is null either way), but where exactly one
  /// side vanishes the ratio is degenerate and any use is an error.
  double modular(Idx m) const { return delta_[m]; }
  bool modular_defined(Idx m) const { return delta_defined_[m]; }
  bool modular_degenerate(Idx m) const { return delta_degenerate_[m]; }
  std::span<const double> modular() const { return delta_; }
  bool modular_total() const { return delta_total_; }

  /// Λ(γ) = sqrt(μ(γ)·μ(γ⁻¹)): inversion-invariant by construction.
  double invariant(Idx m) const { return Lambda_[m]; }
  std::span<const double> invariant() const { return Lambda_; }

  double orbit_lambda(Idx orbit) const { return orbit_lambda_[orbit]; }
  std::size_t isotropy_order(Idx orbit) const { return orbit_isotropy_[orbit]; }

  /// True when this Haar choice is in the regime where the state/decoherence
  /// bridge is certified: the normalized system with every orbit carrying
  /// either all-positive or all-zero λ.
  bool bridge_certified() const { return bridge_certified_; }

 private:
  friend MeasuredGroupoid counting_haar(GroupoidPtr, std::vector<double>);
  friend MeasuredGroupoid normalized_haar(GroupoidPtr, std::vector<double>);
  friend MeasuredGroupoid custom_haar(GroupoidPtr, std::vector<double>,
                                      std::vector<double>);
  MeasuredGroupoid() = default;
  void derive();

  GroupoidPtr g_;
  HaarKind kind_ = HaarKind::Counting;
  std::vector<double> lambda_, fiber_weight_;
  std::vector<double> mu_, delta_, Lambda_;
  std::vector<bool> delta_defined_, delta_degenerate_;
  bool delta_total_ = true;
  std::vector<double> orbit_lambda_;
  std::vector<std::size_t> orbit_isotropy_;
  bool bridge_certified_ = false;
};

/// Uniform λ (probability measure, 1/|Ω| each).
std::vector<double> uniform_lambda(const FiniteGroupoid& g);

/// fiber_weight ≡ 1. Always left-invariant.
MeasuredGroupoid counting_haar(GroupoidPtr g, std::vector<double> lambda);

/// λ-weighted probability fibers: on each orbit O with λ positive
/// throughout, fiber_weight(γ) = λ(s(γ)) / (λ(O)·|isotropy(O)|), which makes
/// every ν^j a probability measure on G^j and reduces to 1/|G^j| when λ is
/// uniform on the orbit. Orbits containing a zero of λ fall back to the
/// uniform weights 1/|G^j| (weights must stay positive); such mixed orbits
/// drop the bridge certification.
MeasuredGroupoid normalized_haar(GroupoidPtr g, std::vector<double> lambda);

/// Explicit weights; accepted only if left-invariance holds over all
/// composable pairs. Rejection carries the violating (α, γ) pair.
MeasuredGroupoid custom_haar(GroupoidPtr g, std::vector<double> lambda,
                             std::vector<double> fiber_weight);

/// Left-invariance check: fiber_weight(α∘γ) == fiber_weight(γ) for every
/// composable pair (exact comparison; no arithmetic is involved).
std::optional<HaarViolation> check_left_invariance(
    const FiniteGroupoid& g, std::span<const double> fiber_weight);

/// Equivalent characterization: the weight factors through the source map.
bool weight_factors_through_source(const FiniteGroupoid& g,
                                   std::span<const double> fiber_weight);

/// Spec-named accessors (views into the cached derived data).
std::span<const double> modular_function(const MeasuredGroupoid& mg);
std::span<const double> invariant_representative(const MeasuredGroupoid& mg);

}  // namespace grouplogic
