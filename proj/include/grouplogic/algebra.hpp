#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "grouplogic/decoherence.hpp"
#include "grouplogic/measure.hpp"
#include "grouplogic/subsets.hpp"

namespace grouplogic {

/// Element of the convolution *-algebra: one complex coefficient per
/// morphism (dense storage over the morphism index space).
struct GroupoidFunction {
  GroupoidPtr g;
  std::vector<Complex> coeff;

  Complex operator[](Idx m) const { return coeff[m]; }
};

GroupoidFunction zero_function(GroupoidPtr g);
GroupoidFunction delta_function(GroupoidPtr g, Idx m);
GroupoidFunction constant_function(GroupoidPtr g, Complex value);

GroupoidFunction add(const GroupoidFunction& f, const GroupoidFunction& h);
GroupoidFunction subtract(const GroupoidFunction& f, const GroupoidFunction& h);
GroupoidFunction scale(Complex c, const GroupoidFunction& f);
double max_abs_diff(const GroupoidFunction& f, const GroupoidFunction& h);

enum class ConvolutionKind {
  Haar,     // (f⋆h)(γ) = Σ_{α∘β=γ} f(α)h(β)·ν^{t(γ)}(α); associative
  Literal,  // per-γ factor μ(γ) instead of the fiber weight; computed for
            // side-by-side comparison only, algebra laws not certified
};

/// Convolution product. The per-γ accumulation runs in a fixed order
/// (pairs ordered by left factor, then right), so sums are reproducible.
GroupoidFunction convolve(const MeasuredGroupoid& mg, const GroupoidFunction& f,
                          const GroupoidFunction& h,
                          ConvolutionKind kind = ConvolutionKind::Haar);

/// f†(γ) = δ(γ)·conj(f(γ⁻¹)). Throws Error(Measure) when the support of f
/// touches a morphism where the modular function is degenerate (exactly one
/// of μ(γ), μ(γ⁻¹) vanishes).
GroupoidFunction involution(const MeasuredGroupoid& mg,
                            const GroupoidFunction& f);

/// ω_μ(f) = Σ_γ f(γ)·μ(γ), summed in morphism index order.
Complex state(const MeasuredGroupoid& mg, const GroupoidFunction& f);

GroupoidFunction char_fn(const MorphismSet& set);
MorphismSet support(const GroupoidFunction& f, double tol = 1e-12);

/// Unit of the algebra: Σ_j fiber_weight(1_j)⁻¹·δ_{1_j}. The unit property
/// is verified on every basis delta at construction.
GroupoidFunction algebra_unit(const MeasuredGroupoid& mg);

/// ω_μ((χ_{s⁻¹(b)})† ⋆ χ_{s⁻¹(a)}): the state-side route to D(b,a). Equals
/// decoherence(mg, b, a) when mg.bridge_certified(); other Haar choices
/// (and the Literal convolution) still compute the value, and reports tag
/// it "uncertified".
Complex bridge_decoherence(const MeasuredGroupoid& mg, const ObjectSet& b,
                           const ObjectSet& a,
                           ConvolutionKind kind = ConvolutionKind::Haar);

// ---------------------------------------------------------------------------
// Audit kernels
// ---------------------------------------------------------------------------

struct BridgeAudit {
  double max_deviation = 0.0;
  std::uint64_t worst_a = 0, worst_b = 0;  // object masks
  std::uint64_t pairs = 0;
  bool certified = false;
};

/// max |decoherence(b,a) - bridge_decoherence(b,a)| over all subset pairs.
BridgeAudit bridge_audit(const MeasuredGroupoid& mg, int jobs = 0);

struct SupportLawAudit {
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_bad_a = 0, first_bad_b = 0;  // morphism masks
  std::string mode;
};

/// Checks support(χ_A ⋆ χ_B) == A∘B over all pairs of morphism subsets.
/// Fixtures with |G| <= 9 run the full GroupoidFunction path per pair;
/// fixtures with |G| <= 16 run an amortized kernel that folds per-singleton
/// convolution supports over all B with a subset DP (cross-validated against
/// the literal path by the sampled audit below).
SupportLawAudit support_law_audit_exhaustive(const MeasuredGroupoid& mg,
                                             int jobs = 0);

/// Same check on uniformly sampled pairs, always through the literal
/// convolve path.
SupportLawAudit support_law_audit_sampled(const MeasuredGroupoid& mg,
                                          std::size_t pair_count,
                                          std::uint64_t seed);

}  // namespace grouplogic
