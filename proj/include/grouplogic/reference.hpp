#pragma once

#include "grouplogic/algebra.hpp"
#include "grouplogic/decoherence.hpp"
#include "grouplogic/gns.hpp"
#include "grouplogic/subsets.hpp"

// Serial reference implementations. Two flavours live here:
//  - brute-force oracles that evaluate the defining formulas by direct
//    enumeration, sharing no code path with the optimized kernels (used to
//    pin expected values in tests);
//  - serial twins of the OpenMP audit kernels (same per-item arithmetic,
//    plain loops), used for determinism tests and by the benchmark target.

namespace grouplogic::reference {

/// D(b,a) by scanning all morphism pairs for the product set, then summing
/// e^{iS}·sqrt(μ(γ)μ(γ⁻¹)) with μ recomputed from λ and the fiber weights.
Complex decoherence_brute(const MeasuredGroupoid& mg, const ObjectSet& b,
                          const ObjectSet& a,
                          const PhaseAction* phase = nullptr);

double mu2_brute(const MeasuredGroupoid& mg, const ObjectSet& a,
                 const PhaseAction* phase = nullptr);

double sorkin_brute(const MeasuredGroupoid& mg, const ObjectSet& a,
                    const ObjectSet& b, const ObjectSet& c,
                    const PhaseAction* phase = nullptr);

/// Conditioning by scanning the full morphism grid for a composable pair in
/// t⁻¹(b) × s⁻¹(a).
bool conditioned_brute(const FiniteGroupoid& g, const ObjectSet& a,
                       const ObjectSet& b);

/// Convolution through the fiber-integral formula
/// (f⋆h)(γ) = Σ_{α ∈ G^{t(γ)}} f(α)·h(α⁻¹∘γ)·w(α), one γ at a time.
GroupoidFunction convolve_brute(const MeasuredGroupoid& mg,
                                const GroupoidFunction& f,
                                const GroupoidFunction& h);

// Serial twins.
std::vector<double> mu2_table_serial(const MeasuredGroupoid& mg,
                                     const PhaseAction* phase = nullptr);
SorkinAudit sorkin_audit_serial(const MeasuredGroupoid& mg,
                                const PhaseAction* phase = nullptr);
RelationReport relation_report_serial(GroupoidPtr g);
GramMatrix gram_serial(const MeasuredGroupoid& mg);
SupportLawAudit support_law_audit_serial(const MeasuredGroupoid& mg);

}  // namespace grouplogic::reference
