#include "grouplogic/reference.hpp"

#include <cmath>
#include <tuple>

namespace grouplogic::reference {

Complex decoherence_brute(const MeasuredGroupoid& mg, const ObjectSet& b,
                          const ObjectSet& a, const PhaseAction* phase) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = g.morphism_count();
  std::vector<char> in_product(n, 0);
  for (Idx beta = 0; beta < n; ++beta) {
    if (!b.bits.test(g.target(beta))) continue;
    for (Idx alpha = 0; alpha < n; ++alpha) {
      if (!a.bits.test(g.source(alpha))) continue;
      if (g.source(beta) != g.target(alpha)) continue;
      Idx gamma = g.compose_raw(beta, alpha);
      if (gamma != kNoIdx) in_product[gamma] = 1;
    }
  }
  Complex sum{0.0, 0.0};
  for (Idx gamma = 0; gamma < n; ++gamma) {
    if (!in_product[gamma]) continue;
    Idx inv = g.inverse(gamma);
    double mu_g = mg.lambda(g.target(gamma)) * mg.fiber_weight(gamma);
    double mu_i = mg.lambda(g.target(inv)) * mg.fiber_weight(inv);
    double lam = std::sqrt(std::min(mu_g, mu_i) * std::max(mu_g, mu_i));
    double s = phase ? phase->values[gamma] : 0.0;
    sum += Complex{std::cos(s), std::sin(s)} * lam;
  }
  return sum;
}

double mu2_brute(const MeasuredGroupoid& mg, const ObjectSet& a,
                 const PhaseAction* phase) {
  return decoherence_brute(mg, a, a, phase).real();
}

double sorkin_brute(const MeasuredGroupoid& mg, const ObjectSet& a,
                    const ObjectSet& b, const ObjectSet& c,
                    const PhaseAction* phase) {
  auto m2 = [&](const ObjectSet& x) { return mu2_brute(mg, x, phase); };
  ObjectSet ab = set_union(a, b), ac = set_union(a, c), bc = set_union(b, c);
  return m2(set_union(ab, c)) - m2(ab) - m2(ac) - m2(bc) + m2(a) + m2(b) +
         m2(c);
}

bool conditioned_brute(const FiniteGroupoid& g, const ObjectSet& a,
                       const ObjectSet& b) {
  for (Idx beta = 0; beta < g.morphism_count(); ++beta) {
    if (!b.bits.test(g.target(beta))) continue;
    for (Idx alpha = 0; alpha < g.morphism_count(); ++alpha) {
      if (!a.bits.test(g.source(alpha))) continue;
      if (g.source(beta) == g.target(alpha) &&
          g.compose_raw(beta, alpha) != kNoIdx)
        return true;
    }
  }
  return false;
}

GroupoidFunction convolve_brute(const MeasuredGroupoid& mg,
                                const GroupoidFunction& f,
                                const GroupoidFunction& h) {
  const FiniteGroupoid& g = mg.groupoid();
  GroupoidFunction out = zero_function(f.g);
  for (Idx gamma = 0; gamma < g.morphism_count(); ++gamma) {
    Complex acc{0.0, 0.0};
    for (Idx alpha : g.target_fiber(g.target(gamma))) {
      Idx rest = g.compose_raw(g.inverse(alpha), gamma);
      if (rest == kNoIdx) continue;
      acc += f.coeff[alpha] * h.coeff[rest] * mg.fiber_weight(alpha);
    }
    out.coeff[gamma] = acc;
  }
  return out;
}

std::vector<double> mu2_table_serial(const MeasuredGroupoid& mg,
                                     const PhaseAction* phase) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = g.object_count();
  const std::uint64_t total = 1ull << n;
  std::vector<double> table(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    table[mask] =
        mu2_brute(mg, object_set_from_mask(mg.groupoid_ptr(), mask), phase);
  return table;
}

SorkinAudit sorkin_audit_serial(const MeasuredGroupoid& mg,
                                const PhaseAction* phase) {
  const std::size_t n = mg.groupoid().object_count();
  const std::uint64_t total = 1ull << n;
  std::vector<double> mu2 = mu2_table_serial(mg, phase);
  SorkinAudit audit;
  double best = -1.0;
  for (std::uint64_t a = 0; a < total; ++a) {
    const std::uint64_t rest_a = (total - 1) & ~a;
    std::uint64_t b = rest_a;
    while (true) {
      const std::uint64_t rest_b = rest_a & ~b;
      std::uint64_t c = rest_b;
      while (true) {
        double r = mu2[a | b | c] - mu2[a | b] - mu2[a | c] - mu2[b | c] +
                   mu2[a] + mu2[b] + mu2[c];
        ++audit.triples;
        if (std::abs(r) > best) {
          best = std::abs(r);
          audit.worst_a = a;
          audit.worst_b = b;
          audit.worst_c = c;
        }
        if (c == 0) break;
        c = (c - 1) & rest_b;
      }
      if (b == 0) break;
      b = (b - 1) & rest_a;
    }
  }
  audit.max_residual = best < 0 ? 0.0 : best;
  return audit;
}

RelationReport relation_report_serial(GroupoidPtr g) {
  const std::size_t n = g->object_count();
  const std::uint64_t total = 1ull << n;
  RelationReport rep;
  rep.reflexive_on_nonempty = true;
  rep.symmetric = true;
  rep.transitive = true;
  std::uint64_t first_a = total, first_c = total;
  for (std::uint64_t am = 1; am < total; ++am) {
    ObjectSet a = object_set_from_mask(g, am);
    if (!conditioned(*g, a, a)) rep.reflexive_on_nonempty = false;
    for (std::uint64_t cm = 1; cm < total; ++cm) {
      ObjectSet c = object_set_from_mask(g, cm);
      bool ac = conditioned(*g, a, c);
      if (ac != conditioned(*g, c, a)) rep.symmetric = false;
      if (!ac && std::tuple(am, cm) < std::tuple(first_a, first_c)) {
        first_a = am;
        first_c = cm;
      }
      ++rep.pairs_checked;
    }
  }
  if (first_a < total) {
    rep.transitive = false;
    rep.witness_a = first_a;
    rep.witness_b = first_a | first_c;
    rep.witness_c = first_c;
  }
  return rep;
}

GramMatrix gram_serial(const MeasuredGroupoid& mg) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = g.morphism_count();
  GramMatrix gm;
  gm.g = mg.groupoid_ptr();
  gm.n = n;
  gm.certified = mg.bridge_certified();
  gm.entries.assign(n * n, Complex{0.0, 0.0});
  std::vector<char> excluded(n, 0);
  for (Idx m = 0; m < n; ++m)
    if (mg.modular_degenerate(g.inverse(m))) excluded[m] = 1;
  for (Idx alpha = 0; alpha < n; ++alpha) {
    if (excluded[alpha]) { gm.excluded.push_back(alpha); continue; }
    GroupoidFunction dagger =
        involution(mg, delta_function(mg.groupoid_ptr(), alpha));
    for (Idx beta = 0; beta < n; ++beta) {
      if (excluded[beta]) continue;
      gm.entries[alpha * n + beta] = state(
          mg, convolve(mg, dagger, delta_function(mg.groupoid_ptr(), beta)));
    }
  }
  return gm;
}

SupportLawAudit support_law_audit_serial(const MeasuredGroupoid& mg) {
  const std::size_t nm = mg.groupoid().morphism_count();
  if (nm > 16)
    throw_resource("serial support-law audit capped at 16 morphisms");
  const std::uint64_t total = 1ull << nm;
  SupportLawAudit audit;
  audit.mode = "serial-literal";
  for (std::uint64_t am = 0; am < total; ++am) {
    MorphismSet a{mg.groupoid_ptr(), Bitset(nm, am)};
    for (std::uint64_t bm = 0; bm < total; ++bm) {
      MorphismSet b{mg.groupoid_ptr(), Bitset(nm, bm)};
      MorphismSet lhs = support(convolve(mg, char_fn(a), char_fn(b)));
      MorphismSet rhs = set_product(mg.groupoid(), b, a);
      if (lhs.bits != rhs.bits) {
        if (audit.violations == 0) {
          audit.first_bad_a = am;
          audit.first_bad_b = bm;
        }
        ++audit.violations;
      }
      ++audit.pairs_checked;
    }
  }
  return audit;
}

}  // namespace grouplogic::reference
