#include "grouplogic/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <tuple>

#include "parallel_util.hpp"

namespace grouplogic {

namespace {

void check_same(const MeasuredGroupoid& mg, const GroupoidFunction& f) {
  if (f.g.get() != &mg.groupoid())
    throw_input("function belongs to a different groupoid");
}

}  // namespace

GroupoidFunction zero_function(GroupoidPtr g) {
  auto n = g->morphism_count();
  return {std::move(g), std::vector<Complex>(n, Complex{0.0, 0.0})};
}

GroupoidFunction delta_function(GroupoidPtr g, Idx m) {
  auto f = zero_function(std::move(g));
  f.coeff[m] = Complex{1.0, 0.0};
  return f;
}

GroupoidFunction constant_function(GroupoidPtr g, Complex value) {
  auto n = g->morphism_count();
  return {std::move(g), std::vector<Complex>(n, value)};
}

GroupoidFunction add(const GroupoidFunction& f, const GroupoidFunction& h) {
  if (f.g.get() != h.g.get()) throw_input("functions over different groupoids");
  GroupoidFunction out = f;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += h.coeff[i];
  return out;
}

GroupoidFunction subtract(const GroupoidFunction& f, const GroupoidFunction& h) {
  if (f.g.get() != h.g.get()) throw_input("functions over different groupoids");
  GroupoidFunction out = f;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] -= h.coeff[i];
  return out;
}

GroupoidFunction scale(Complex c, const GroupoidFunction& f) {
  GroupoidFunction out = f;
  for (auto& v : out.coeff) v *= c;
  return out;
}

double max_abs_diff(const GroupoidFunction& f, const GroupoidFunction& h) {
  if (f.g.get() != h.g.get()) throw_input("functions over different groupoids");
  double m = 0.0;
  for (std::size_t i = 0; i < f.coeff.size(); ++i)
    m = std::max(m, std::abs(f.coeff[i] - h.coeff[i]));
  return m;
}

GroupoidFunction convolve(const MeasuredGroupoid& mg, const GroupoidFunction& f,
                          const GroupoidFunction& h, ConvolutionKind kind) {
  check_same(mg, f);
  check_same(mg, h);
  const FiniteGroupoid& g = mg.groupoid();
  GroupoidFunction out = zero_function(f.g);
  if (kind == ConvolutionKind::Haar) {
    for (const auto& [a, b, c] : g.composable_triples())
      out.coeff[c] += f.coeff[a] * h.coeff[b] * mg.fiber_weight(a);
  } else {
    for (const auto& [a, b, c] : g.composable_triples())
      out.coeff[c] += f.coeff[a] * h.coeff[b] * mg.mu(c);
  }
  return out;
}

GroupoidFunction involution(const MeasuredGroupoid& mg,
                            const GroupoidFunction& f) {
  check_same(mg, f);
  const FiniteGroupoid& g = mg.groupoid();
  GroupoidFunction out = zero_function(f.g);
  for (Idx m = 0; m < g.morphism_count(); ++m) {
    Idx inv = g.inverse(m);
    Complex c = f.coeff[inv];
    if (c == Complex{0.0, 0.0}) continue;
    if (mg.modular_degenerate(m))
      throw_measure("involution hits morphism " + g.morphism_label(m) +
                    " where the modular function is degenerate");
    out.coeff[m] = mg.modular(m) * std::conj(c);
  }
  return out;
}

Complex state(const MeasuredGroupoid& mg, const GroupoidFunction& f) {
  check_same(mg, f);
  Complex sum{0.0, 0.0};
  for (Idx m = 0; m < mg.groupoid().morphism_count(); ++m)
    sum += f.coeff[m] * mg.mu(m);
  return sum;
}

GroupoidFunction char_fn(const MorphismSet& set) {
  GroupoidFunction f = zero_function(set.g);
  for (auto m = set.bits.find_first(); m != Bitset::npos;
       m = set.bits.find_next(m))
    f.coeff[m] = Complex{1.0, 0.0};
  return f;
}

MorphismSet support(const GroupoidFunction& f, double tol) {
  MorphismSet s{f.g, Bitset(f.coeff.size())};
  for (Idx m = 0; m < f.coeff.size(); ++m)
    if (std::abs(f.coeff[m]) > tol) s.bits.set(m);
  return s;
}

GroupoidFunction algebra_unit(const MeasuredGroupoid& mg) {
  const FiniteGroupoid& g = mg.groupoid();
  GroupoidFunction u = zero_function(mg.groupoid_ptr());
  for (Idx j = 0; j < g.object_count(); ++j) {
    Idx unit = g.unit_at(j);
    if (unit == kNoIdx)
      throw_input("algebra unit needs a unit morphism at every object");
    u.coeff[unit] = Complex{1.0 / mg.fiber_weight(unit), 0.0};
  }
  for (Idx m = 0; m < g.morphism_count(); ++m) {
    GroupoidFunction d = delta_function(mg.groupoid_ptr(), m);
    if (max_abs_diff(convolve(mg, u, d), d) > 1e-9 ||
        max_abs_diff(convolve(mg, d, u), d) > 1e-9)
      throw std::logic_error("algebra unit failed its unit law");
  }
  return u;
}

Complex bridge_decoherence(const MeasuredGroupoid& mg, const ObjectSet& b,
                           const ObjectSet& a, ConvolutionKind kind) {
  const FiniteGroupoid& g = mg.groupoid();
  GroupoidFunction chi_b = char_fn(source_fiber(g, b));
  GroupoidFunction chi_a = char_fn(source_fiber(g, a));
  return state(mg, convolve(mg, involution(mg, chi_b), chi_a, kind));
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

BridgeAudit bridge_audit(const MeasuredGroupoid& mg, int jobs) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t n = g.object_count();
  if (n > Limits::max_scan_objects())
    throw_resource("bridge audit capped at " +
                   std::to_string(Limits::max_scan_objects()) + " objects");
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);

  const std::uint64_t total = 1ull << n;
  BridgeAudit audit;
  audit.certified = mg.bridge_certified();

  double best = -1.0;
  std::uint64_t wa = 0, wb = 0;
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
  {
    double local_best = -1.0;
    std::uint64_t la = 0, lb = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8) nowait
#endif
    for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(total); ++ai) {
      const std::uint64_t am = static_cast<std::uint64_t>(ai);
      ObjectSet a = object_set_from_mask(mg.groupoid_ptr(), am);
      for (std::uint64_t bm = 0; bm < total; ++bm) {
        ObjectSet b = object_set_from_mask(mg.groupoid_ptr(), bm);
        double dev =
            std::abs(decoherence(mg, b, a) - bridge_decoherence(mg, b, a));
        if (dev > local_best ||
            (dev == local_best && std::tuple(am, bm) < std::tuple(la, lb))) {
          local_best = dev;
          la = am;
          lb = bm;
        }
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_best > best ||
          (local_best == best && std::tuple(la, lb) < std::tuple(wa, wb))) {
        best = local_best;
        wa = la;
        wb = lb;
      }
    }
  }
  audit.max_deviation = best < 0 ? 0.0 : best;
  audit.worst_a = wa;
  audit.worst_b = wb;
  audit.pairs = total * total;
  return audit;
}

namespace {

// Literal per-pair check used for small fixtures and for sampling:
// support(χ_A ⋆ χ_B) against A∘B via the subset product.
bool support_pair_ok(const MeasuredGroupoid& mg, const MorphismSet& a,
                     const MorphismSet& b) {
  MorphismSet lhs = support(convolve(mg, char_fn(a), char_fn(b)));
  MorphismSet rhs = set_product(mg.groupoid(), b, a);  // = A∘B
  return lhs.bits == rhs.bits;
}

}  // namespace

SupportLawAudit support_law_audit_exhaustive(const MeasuredGroupoid& mg,
                                             int jobs) {
  const FiniteGroupoid& g = mg.groupoid();
  const std::size_t nm = g.morphism_count();
  if (nm > 16)
    throw_resource("exhaustive support-law audit capped at 16 morphisms");
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);

  const std::uint64_t total = 1ull << nm;
  SupportLawAudit audit;

  if (nm <= 9) {
    audit.mode = "exhaustive-literal";
    std::uint64_t bad = 0, first_a = total, first_b = total;
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
      std::uint64_t lbad = 0, la = total, lb = total;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4) nowait
#endif
      for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(total); ++ai) {
        const std::uint64_t am = static_cast<std::uint64_t>(ai);
        MorphismSet a{mg.groupoid_ptr(), Bitset(nm, am)};
        for (std::uint64_t bm = 0; bm < total; ++bm) {
          MorphismSet b{mg.groupoid_ptr(), Bitset(nm, bm)};
          if (!support_pair_ok(mg, a, b)) {
            ++lbad;
            if (std::tuple(am, bm) < std::tuple(la, lb)) {
              la = am;
              lb = bm;
            }
          }
        }
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        bad += lbad;
        if (std::tuple(la, lb) < std::tuple(first_a, first_b)) {
          first_a = la;
          first_b = lb;
        }
      }
    }
    audit.pairs_checked = total * total;
    audit.violations = bad;
    if (bad) {
      audit.first_bad_a = first_a;
      audit.first_bad_b = first_b;
    }
    return audit;
  }

  // Amortized kernel. For a fixed A, the convolution is additive in B with
  // positive contributions, so support(χ_A ⋆ χ_B) is the union over β∈B of
  // the per-singleton supports; both routes are folded over every B with a
  // subset DP and compared pair by pair.
  audit.mode = "exhaustive-kernel";

  // Triples grouped by the right factor.
  std::vector<std::vector<std::pair<Idx, Idx>>> by_beta(nm);
  for (const auto& [a, b, c] : g.composable_triples())
    by_beta[b].push_back({a, c});

  std::uint64_t bad = 0, first_a = total + 1, first_b = total + 1;
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
  {
    std::vector<double> acc(nm, 0.0);
    std::vector<std::uint32_t> u1(total), u2(total);
    std::uint64_t lbad = 0, la = total + 1, lb = total + 1;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
    for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(total); ++ai) {
      const std::uint64_t am = static_cast<std::uint64_t>(ai);
      std::vector<std::uint32_t> q1(nm, 0), q2(nm, 0);
      MorphismSet a_set{mg.groupoid_ptr(), Bitset(nm, am)};
      for (Idx beta = 0; beta < nm; ++beta) {
        // Route 1: the convolution accumulation of χ_A ⋆ δ_β.
        std::fill(acc.begin(), acc.end(), 0.0);
        for (const auto& [alpha, gamma] : by_beta[beta])
          if ((am >> alpha) & 1) acc[gamma] += mg.fiber_weight(alpha);
        std::uint32_t mask = 0;
        for (Idx c = 0; c < nm; ++c)
          if (std::abs(acc[c]) > 1e-12) mask |= 1u << c;
        q1[beta] = mask;
        // Route 2: the subset product A∘{β}.
        MorphismSet bset = make_morphism_set(mg.groupoid_ptr(), {beta});
        MorphismSet prod = set_product(g, bset, a_set);
        q2[beta] = static_cast<std::uint32_t>(prod.bits.to_ulong());
      }
      u1[0] = 0;
      u2[0] = 0;
      for (std::uint64_t bm = 1; bm < total; ++bm) {
        std::uint64_t low = bm & (~bm + 1);
        int lowbit = std::countr_zero(low);
        u1[bm] = u1[bm ^ low] | q1[lowbit];
        u2[bm] = u2[bm ^ low] | q2[lowbit];
        if (u1[bm] != u2[bm]) {
          ++lbad;
          if (std::tuple(am, bm) < std::tuple(la, lb)) {
            la = am;
            lb = bm;
          }
        }
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      bad += lbad;
      if (std::tuple(la, lb) < std::tuple(first_a, first_b)) {
        first_a = la;
        first_b = lb;
      }
    }
  }
  audit.pairs_checked = total * total;
  audit.violations = bad;
  if (bad) {
    audit.first_bad_a = first_a;
    audit.first_bad_b = first_b;
  }
  return audit;
}

SupportLawAudit support_law_audit_sampled(const MeasuredGroupoid& mg,
                                          std::size_t pair_count,
                                          std::uint64_t seed) {
  const std::size_t nm = mg.groupoid().morphism_count();
  if (nm > 64) throw_resource("sampled support-law audit capped at 64 morphisms");
  SupportLawAudit audit;
  audit.mode = "sampled";
  std::mt19937_64 rng(seed);
  for (std::size_t it = 0; it < pair_count; ++it) {
    std::uint64_t am = rng(), bm = rng();
    if (nm < 64) {
      am &= (1ull << nm) - 1;
      bm &= (1ull << nm) - 1;
    }
    MorphismSet a{mg.groupoid_ptr(), Bitset(nm, am)};
    MorphismSet b{mg.groupoid_ptr(), Bitset(nm, bm)};
    if (!support_pair_ok(mg, a, b)) {
      if (audit.violations == 0) {
        audit.first_bad_a = am;
        audit.first_bad_b = bm;
      }
      ++audit.violations;
    }
    ++audit.pairs_checked;
  }
  return audit;
}

}  // namespace grouplogic
