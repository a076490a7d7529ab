#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "grouplogic/measure.hpp"
#include "grouplogic/phase.hpp"
#include "grouplogic/subsets.hpp"

namespace grouplogic {

using Complex = std::complex<double>;

/// D(b,a): the Λ-measure of the product set t⁻¹(b)∘s⁻¹(a), each morphism
/// weighted by e^{iS(γ)} when a phase is supplied. Real-valued without a
/// phase; zero when the pair is not conditioned (empty product set).
/// The product set is materialized once and summed in morphism index order.
Complex decoherence(const MeasuredGroupoid& mg, const ObjectSet& b,
                    const ObjectSet& a, const PhaseAction* phase = nullptr);

/// μ₂(a) = D(a,a). Real even with phases; the imaginary part only carries
/// rounding noise and is dropped here.
double grade2(const MeasuredGroupoid& mg, const ObjectSet& a,
              const PhaseAction* phase = nullptr);

/// I(a,b) = μ₂(a∪b) - μ₂(a) - μ₂(b) for disjoint a, b. Also evaluated as
/// D(a,b) + D(b,a) and cross-checked; a gross disagreement of the two routes
/// indicates an internal fault and throws.
double interference(const MeasuredGroupoid& mg, const ObjectSet& a,
                    const ObjectSet& b, const PhaseAction* phase = nullptr);

/// Third-order alternating sum
/// μ₂(a∪b∪c) - μ₂(a∪b) - μ₂(a∪c) - μ₂(b∪c) + μ₂(a) + μ₂(b) + μ₂(c)
/// for pairwise disjoint arguments; vanishes for every groupoid-induced μ₂.
double sorkin_third_order(const MeasuredGroupoid& mg, const ObjectSet& a,
                          const ObjectSet& b, const ObjectSet& c,
                          const PhaseAction* phase = nullptr);

// ---------------------------------------------------------------------------
// Audit kernels (OpenMP). All results are deterministic for any thread count.
// ---------------------------------------------------------------------------

/// μ₂ for every subset of Ω, indexed by object bitmask. Guarded by the scan
/// cap. Each entry is summed in a fixed morphism order.
std::vector<double> mu2_table(const MeasuredGroupoid& mg,
                              const PhaseAction* phase = nullptr,
                              int jobs = 0);

/// D(b,a) for every pair of subsets, indexed by (b_mask << n) | a_mask.
/// Guarded at 2^(2n) table entries; intended for |Ω| <= 8.
std::vector<Complex> decoherence_table(const MeasuredGroupoid& mg,
                                       const PhaseAction* phase = nullptr,
                                       int jobs = 0);

struct SorkinAudit {
  double max_residual = 0.0;
  std::uint64_t worst_a = 0, worst_b = 0, worst_c = 0;  // object masks
  std::uint64_t triples = 0;
};

/// max |I^(3)| over all pairwise disjoint subset triples.
SorkinAudit sorkin_audit(const MeasuredGroupoid& mg,
                         const PhaseAction* phase = nullptr, int jobs = 0);

struct DecoherenceAxiomAudit {
  std::uint64_t positivity_violations = 0;
  std::uint64_t hermiticity_violations = 0;
  std::uint64_t biadditivity_violations = 0;
  double min_diagonal = 0.0;        // min Re D(a,a)
  double max_diagonal_imag = 0.0;   // max |Im D(a,a)|
  double max_hermiticity_dev = 0.0; // max |D(b,a) - conj(D(a,b))|
  double max_biadditivity_dev = 0.0;
  std::uint64_t pairs = 0;
};

/// Exhaustive positivity / hermiticity / bi-additivity scan over P(Ω),
/// against the given tolerance.
DecoherenceAxiomAudit decoherence_axiom_audit(const MeasuredGroupoid& mg,
                                              const PhaseAction* phase,
                                              double tol, int jobs = 0);

/// Matrix report over an explicit subset family (CLI surface).
struct DecoherenceReport {
  std::vector<ObjectSet> family;
  std::vector<std::vector<Complex>> d;      // d[i][j] = D(family[i], family[j])
  std::vector<double> mu2;                  // diagonal
  std::vector<std::vector<Complex>> interference;  // 0 where not disjoint
  double max_third_order = 0.0;  // max |I3| over disjoint family triples
  bool has_phase = false;
};

DecoherenceReport build_decoherence_report(const MeasuredGroupoid& mg,
                                           std::vector<ObjectSet> family,
                                           const PhaseAction* phase = nullptr);

}  // namespace grouplogic
