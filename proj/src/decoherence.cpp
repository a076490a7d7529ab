#include "grouplogic/decoherence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "parallel_util.hpp"

namespace grouplogic {

namespace {

void check_phase(const MeasuredGroupoid& mg, const PhaseAction* phase) {
  if (!phase) return;
  if (phase->g.get() != &mg.groupoid())
    throw_input("phase belongs to a different groupoid");
  if (phase->values.size() != mg.groupoid().morphism_count())
    throw_measure("phase must assign a value to every morphism");
}

inline Complex phase_factor(const PhaseAction* phase, Idx m) {
  if (!phase) return {1.0, 0.0};
  double s = phase->values[m];
  return {std::cos(s), std::sin(s)};
}

std::size_t checked_scan_width(const MeasuredGroupoid& mg, std::size_t cap) {
  std::size_t n = mg.groupoid().object_count();
  if (n > cap)
    throw_resource("subset scan capped at " + std::to_string(cap) +
                   " objects; got " + std::to_string(n));
  return n;
}

}  // namespace

Complex decoherence(const MeasuredGroupoid& mg, const ObjectSet& b,
                    const ObjectSet& a, const PhaseAction* phase) {
  const FiniteGroupoid& g = mg.groupoid();
  if (a.g.get() != &g || b.g.get() != &g)
    throw_input("subsets belong to a different groupoid");
  check_phase(mg, phase);

  MorphismSet product =
      set_product(g, source_fiber(g, a), target_fiber(g, b));
  Complex sum{0.0, 0.0};
  for (auto m = product.bits.find_first(); m != Bitset::npos;
       m = product.bits.find_next(m)) {
    Idx gamma = static_cast<Idx>(m);
    sum += phase_factor(phase, gamma) * mg.invariant(gamma);
  }
  return sum;
}

double grade2(const MeasuredGroupoid& mg, const ObjectSet& a,
              const PhaseAction* phase) {
  return decoherence(mg, a, a, phase).real();
}

double interference(const MeasuredGroupoid& mg, const ObjectSet& a,
                    const ObjectSet& b, const PhaseAction* phase) {
  if (!disjoint(a, b)) throw_input("interference requires disjoint subsets");
  double via_mu2 = grade2(mg, set_union(a, b), phase) - grade2(mg, a, phase) -
                   grade2(mg, b, phase);
  Complex cross = decoherence(mg, a, b, phase) + decoherence(mg, b, a, phase);
  double guard = 1e-9 * std::max(1.0, std::abs(via_mu2));
  if (std::abs(via_mu2 - cross.real()) > guard ||
      std::abs(cross.imag()) > guard)
    throw std::logic_error("interference cross-check failed");
  return via_mu2;
}

double sorkin_third_order(const MeasuredGroupoid& mg, const ObjectSet& a,
                          const ObjectSet& b, const ObjectSet& c,
                          const PhaseAction* phase) {
  if (!disjoint(a, b) || !disjoint(a, c) || !disjoint(b, c))
    throw_input("sorkin_third_order requires pairwise disjoint subsets");
  auto m2 = [&](const ObjectSet& x) { return grade2(mg, x, phase); };
  ObjectSet ab = set_union(a, b), ac = set_union(a, c), bc = set_union(b, c);
  return m2(set_union(ab, c)) - m2(ab) - m2(ac) - m2(bc) + m2(a) + m2(b) +
         m2(c);
}

// ---------------------------------------------------------------------------
// Audit kernels
// ---------------------------------------------------------------------------

std::vector<double> mu2_table(const MeasuredGroupoid& mg,
                              const PhaseAction* phase, int jobs) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = checked_scan_width(mg, Limits::max_scan_objects());
  check_phase(mg, phase);
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);

  const std::uint64_t total = 1ull << n;
  std::vector<double> table(total, 0.0);
  const std::size_t nm = g.morphism_count();

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total);
       ++mask) {
    // Product set of (a,a) is exactly the morphisms staying inside a.
    Complex sum{0.0, 0.0};
    for (Idx m = 0; m < nm; ++m) {
      if ((mask >> g.source(m)) & 1 && (mask >> g.target(m)) & 1)
        sum += phase_factor(phase, m) * mg.invariant(m);
    }
    table[static_cast<std::uint64_t>(mask)] = sum.real();
  }
  return table;
}

std::vector<Complex> decoherence_table(const MeasuredGroupoid& mg,
                                       const PhaseAction* phase, int jobs) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = checked_scan_width(mg, 8);
  check_phase(mg, phase);
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);

  const std::uint64_t total = 1ull << n;
  std::vector<Complex> table(total * total);
  const std::size_t nm = g.morphism_count();

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads)
#endif
  for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(total); ++ai) {
    const std::uint64_t a = static_cast<std::uint64_t>(ai);
    // Partial sums per target object, then fold over b by subset DP.
    std::vector<Complex> per_target(n, Complex{0.0, 0.0});
    for (Idx m = 0; m < nm; ++m)
      if ((a >> g.source(m)) & 1)
        per_target[g.target(m)] += phase_factor(phase, m) * mg.invariant(m);
    std::vector<Complex> acc(total, Complex{0.0, 0.0});
    for (std::uint64_t b = 1; b < total; ++b) {
      std::uint64_t low = b & (~b + 1);
      acc[b] = acc[b ^ low] + per_target[std::countr_zero(low)];
      table[(b << n) | a] = acc[b];
    }
  }
  return table;
}

SorkinAudit sorkin_audit(const MeasuredGroupoid& mg, const PhaseAction* phase,
                         int jobs) {
  const std::size_t n = checked_scan_width(mg, Limits::max_scan_objects());
  std::vector<double> mu2 = mu2_table(mg, phase, jobs);
  const std::uint64_t total = 1ull << n;

  SorkinAudit audit;
  double best = -1.0;
  std::uint64_t bw_a = 0, bw_b = 0, bw_c = 0;
  std::uint64_t count = 0;
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
  {
    double local_best = -1.0;
    std::uint64_t la = 0, lb = 0, lc = 0, lcount = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
    for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(total); ++ai) {
      const std::uint64_t a = static_cast<std::uint64_t>(ai);
      const std::uint64_t rest_a = (total - 1) & ~a;
      // Enumerates b over submasks of ~a, then c over submasks of ~(a|b).
      std::uint64_t b = rest_a;
      while (true) {
        const std::uint64_t rest_b = rest_a & ~b;
        std::uint64_t c = rest_b;
        while (true) {
          double r = mu2[a | b | c] - mu2[a | b] - mu2[a | c] - mu2[b | c] +
                     mu2[a] + mu2[b] + mu2[c];
          double ar = std::abs(r);
          ++lcount;
          if (ar > local_best ||
              (ar == local_best &&
               std::tuple(a, b, c) < std::tuple(la, lb, lc))) {
            local_best = ar;
            la = a; lb = b; lc = c;
          }
          if (c == 0) break;
          c = (c - 1) & rest_b;
        }
        if (b == 0) break;
        b = (b - 1) & rest_a;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_best > best ||
          (local_best == best &&
           std::tuple(la, lb, lc) < std::tuple(bw_a, bw_b, bw_c))) {
        best = local_best;
        bw_a = la; bw_b = lb; bw_c = lc;
      }
      count += lcount;
    }
  }

  audit.max_residual = best < 0 ? 0.0 : best;
  audit.worst_a = bw_a;
  audit.worst_b = bw_b;
  audit.worst_c = bw_c;
  audit.triples = count;
  return audit;
}

DecoherenceAxiomAudit decoherence_axiom_audit(const MeasuredGroupoid& mg,
                                              const PhaseAction* phase,
                                              double tol, int jobs) {
  const std::size_t n = checked_scan_width(mg, 8);
  std::vector<Complex> d = decoherence_table(mg, phase, jobs);
  const std::uint64_t total = 1ull << n;

  DecoherenceAxiomAudit audit;
  audit.min_diagonal = 0.0;
  for (std::uint64_t a = 0; a < total; ++a) {
    Complex daa = d[(a << n) | a];
    audit.min_diagonal = std::min(audit.min_diagonal, daa.real());
    audit.max_diagonal_imag =
        std::max(audit.max_diagonal_imag, std::abs(daa.imag()));
    if (daa.real() < -tol || std::abs(daa.imag()) > tol)
      ++audit.positivity_violations;
  }

  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) {
      double dev = std::abs(d[(b << n) | a] - std::conj(d[(a << n) | b]));
      audit.max_hermiticity_dev = std::max(audit.max_hermiticity_dev, dev);
      if (dev > tol) ++audit.hermiticity_violations;
      ++audit.pairs;
    }

  // D(a, b∪c) = D(a,b) + D(a,c) for disjoint b, c. D's second slot is the
  // source side; the first stays fixed here.
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) {
      const std::uint64_t rest = (total - 1) & ~b;
      for (std::uint64_t c = rest;; c = (c - 1) & rest) {
        double dev = std::abs(d[(a << n) | (b | c)] - d[(a << n) | b] -
                              d[(a << n) | c]);
        audit.max_biadditivity_dev = std::max(audit.max_biadditivity_dev, dev);
        if (dev > tol) ++audit.biadditivity_violations;
        if (c == 0) break;
      }
    }

  return audit;
}

DecoherenceReport build_decoherence_report(const MeasuredGroupoid& mg,
                                           std::vector<ObjectSet> family,
                                           const PhaseAction* phase) {
  DecoherenceReport rep;
  rep.has_phase = phase != nullptr;
  rep.family = std::move(family);
  const std::size_t k = rep.family.size();
  rep.d.assign(k, std::vector<Complex>(k));
  rep.interference.assign(k, std::vector<Complex>(k, Complex{0.0, 0.0}));
  rep.mu2.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      rep.d[i][j] = decoherence(mg, rep.family[i], rep.family[j], phase);
  for (std::size_t i = 0; i < k; ++i) rep.mu2[i] = rep.d[i][i].real();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && disjoint(rep.family[i], rep.family[j]))
        rep.interference[i][j] =
            interference(mg, rep.family[i], rep.family[j], phase);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        const ObjectSet &a = rep.family[i], &b = rep.family[j],
                        &c = rep.family[l];
        if (disjoint(a, b) && disjoint(a, c) && disjoint(b, c))
          rep.max_third_order =
              std::max(rep.max_third_order,
                       std::abs(sorkin_third_order(mg, a, b, c, phase)));
      }
  return rep;
}

}  // namespace grouplogic
