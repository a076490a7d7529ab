#include "grouplogic/subsets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "parallel_util.hpp"

namespace grouplogic {

namespace {

void check_same_groupoid(const GroupoidPtr& x, const GroupoidPtr& y) {
  if (x.get() != y.get())
    throw_input("sets are indexed against different groupoids");
}

std::string bits_label(const Bitset& bits,
                       const std::function<std::string(Idx)>& name) {
  std::string out = "{";
  bool first = true;
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    if (!first) out += ",";
    out += name(static_cast<Idx>(i));
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string ObjectSet::label() const {
  return bits_label(bits, [&](Idx j) { return g->object_label(j); });
}

std::string MorphismSet::label() const {
  return bits_label(bits, [&](Idx m) { return g->morphism_label(m); });
}

ObjectSet make_object_set(GroupoidPtr g, std::initializer_list<Idx> objs) {
  ObjectSet s{g, Bitset(g->object_count())};
  for (Idx j : objs) {
    if (j >= g->object_count()) throw_input("object index out of range");
    s.bits.set(j);
  }
  return s;
}

ObjectSet make_object_set(GroupoidPtr g, const std::vector<Idx>& objs) {
  ObjectSet s{g, Bitset(g->object_count())};
  for (Idx j : objs) {
    if (j >= g->object_count()) throw_input("object index out of range");
    s.bits.set(j);
  }
  return s;
}

ObjectSet object_set_from_mask(GroupoidPtr g, std::uint64_t mask) {
  ObjectSet s{g, Bitset(g->object_count())};
  for (Idx j = 0; j < g->object_count() && j < 64; ++j)
    if (mask & (1ull << j)) s.bits.set(j);
  return s;
}

ObjectSet full_object_set(GroupoidPtr g) {
  ObjectSet s{g, Bitset(g->object_count())};
  s.bits.set();
  return s;
}

MorphismSet make_morphism_set(GroupoidPtr g, std::initializer_list<Idx> mors) {
  MorphismSet s{g, Bitset(g->morphism_count())};
  for (Idx m : mors) {
    if (m >= g->morphism_count()) throw_input("morphism index out of range");
    s.bits.set(m);
  }
  return s;
}

MorphismSet make_morphism_set(GroupoidPtr g, const std::vector<Idx>& mors) {
  MorphismSet s{g, Bitset(g->morphism_count())};
  for (Idx m : mors) {
    if (m >= g->morphism_count()) throw_input("morphism index out of range");
    s.bits.set(m);
  }
  return s;
}

MorphismSet full_morphism_set(GroupoidPtr g) {
  MorphismSet s{g, Bitset(g->morphism_count())};
  s.bits.set();
  return s;
}

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
  check_same_groupoid(a.g, b.g);
  return {a.g, a.bits | b.bits};
}
ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b) {
  check_same_groupoid(a.g, b.g);
  return {a.g, a.bits & b.bits};
}
ObjectSet set_complement(const ObjectSet& a) { return {a.g, ~a.bits}; }
bool disjoint(const ObjectSet& a, const ObjectSet& b) {
  check_same_groupoid(a.g, b.g);
  return !a.bits.intersects(b.bits);
}
MorphismSet set_union(const MorphismSet& a, const MorphismSet& b) {
  check_same_groupoid(a.g, b.g);
  return {a.g, a.bits | b.bits};
}
MorphismSet set_intersection(const MorphismSet& a, const MorphismSet& b) {
  check_same_groupoid(a.g, b.g);
  return {a.g, a.bits & b.bits};
}
MorphismSet set_complement(const MorphismSet& a) { return {a.g, ~a.bits}; }

MorphismSet invert_set(const MorphismSet& a) {
  MorphismSet out{a.g, Bitset(a.bits.size())};
  for (auto m = a.bits.find_first(); m != Bitset::npos;
       m = a.bits.find_next(m))
    out.bits.set(a.g->inverse(static_cast<Idx>(m)));
  return out;
}

MorphismSet set_product(const FiniteGroupoid& g, const MorphismSet& a,
                        const MorphismSet& b) {
  check_same_groupoid(a.g, b.g);
  if (a.g.get() != &g) throw_input("sets do not belong to this groupoid");
  MorphismSet out{a.g, Bitset(g.morphism_count())};
  for (Idx j = 0; j < g.object_count(); ++j) {
    for (Idx beta : g.source_fiber(j)) {
      if (!b.bits.test(beta)) continue;
      for (Idx alpha : g.target_fiber(j)) {
        if (!a.bits.test(alpha)) continue;
        Idx c = g.compose_raw(beta, alpha);
        if (c != kNoIdx) out.bits.set(c);
      }
    }
  }
  return out;
}

MorphismSet source_fiber(const FiniteGroupoid& g, const ObjectSet& a) {
  MorphismSet out{a.g, Bitset(g.morphism_count())};
  for (auto j = a.bits.find_first(); j != Bitset::npos; j = a.bits.find_next(j))
    for (Idx m : g.source_fiber(static_cast<Idx>(j))) out.bits.set(m);
  return out;
}

MorphismSet target_fiber(const FiniteGroupoid& g, const ObjectSet& b) {
  MorphismSet out{b.g, Bitset(g.morphism_count())};
  for (auto j = b.bits.find_first(); j != Bitset::npos; j = b.bits.find_next(j))
    for (Idx m : g.target_fiber(static_cast<Idx>(j))) out.bits.set(m);
  return out;
}

bool conditioned(const FiniteGroupoid& g, const ObjectSet& a,
                 const ObjectSet& b) {
  check_same_groupoid(a.g, b.g);
  if (a.empty() || b.empty()) return false;
  // t⁻¹(b)∘s⁻¹(a) != ∅, with an early exit at the first composable pair.
  for (auto j = a.bits.find_first(); j != Bitset::npos;
       j = a.bits.find_next(j)) {
    for (Idx alpha : g.source_fiber(static_cast<Idx>(j)))
      if (b.bits.test(g.target(alpha))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Relation audit
// ---------------------------------------------------------------------------

RelationReport relation_report(GroupoidPtr g, const RelationOptions& opts) {
  const std::size_t n = g->object_count();
  RelationReport rep;

  if (n > opts.cap) {
    if (!opts.allow_sampling)
      throw_resource("relation scan capped at " + std::to_string(opts.cap) +
                     " objects; got " + std::to_string(n));
    // Sampled mode: random non-empty subset pairs through the plain
    // conditioned() path.
    std::mt19937_64 rng(opts.seed);
    auto random_set = [&] {
      ObjectSet s{g, Bitset(n)};
      while (s.bits.none())
        for (std::size_t j = 0; j < n; ++j)
          if (rng() & 1) s.bits.set(j);
      return s;
    };
    rep.sampled = true;
    rep.reflexive_on_nonempty = rep.symmetric = rep.transitive = true;
    for (std::size_t it = 0; it < opts.sample_pairs; ++it) {
      ObjectSet a = random_set(), b = random_set(), c = random_set();
      if (!conditioned(*g, a, a)) rep.reflexive_on_nonempty = false;
      if (conditioned(*g, a, b) != conditioned(*g, b, a))
        rep.symmetric = false;
      if (conditioned(*g, a, b) && conditioned(*g, b, c) &&
          !conditioned(*g, a, c))
        rep.transitive = false;
      rep.pairs_checked += 3;
    }
    return rep;
  }

  // Exhaustive mode. Object-level reachability rows, then a subset DP:
  // reach[a] = union of rows of a's members, so conditioned(a,b) is a single
  // mask test.
  const std::uint64_t total = 1ull << n;
  std::vector<std::uint32_t> row(n, 0);
  for (Idx m = 0; m < g->morphism_count(); ++m)
    row[g->source(m)] |= 1u << g->target(m);
  std::vector<std::uint32_t> reach(total, 0);
  for (std::uint64_t a = 1; a < total; ++a) {
    std::uint64_t low = a & (~a + 1);
    reach[a] = reach[a ^ low] | row[std::countr_zero(low)];
  }

  bool reflexive = true;
  for (std::uint64_t a = 1; a < total; ++a)
    if ((reach[a] & a) == 0) { reflexive = false; break; }

  bool symmetric = true;
  std::uint64_t first_uncond_a = 0, first_uncond_c = 0;
  std::uint64_t pairs = 0;

  [[maybe_unused]] const int nthreads = detail::thread_count(opts.jobs);
  {
    bool sym_ok = true;
    std::uint64_t best_a = total, best_c = total;
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
      bool local_sym = true;
      std::uint64_t la = total, lc = total;
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
      for (std::int64_t ai = 1; ai < static_cast<std::int64_t>(total); ++ai) {
        const std::uint64_t a = static_cast<std::uint64_t>(ai);
        for (std::uint64_t c = 1; c < total; ++c) {
          bool ac = (reach[a] & c) != 0;
          bool ca = (reach[c] & a) != 0;
          if (ac != ca) local_sym = false;
          if (!ac && (a < la || (a == la && c < lc))) { la = a; lc = c; }
        }
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!local_sym) sym_ok = false;
        if (la < best_a || (la == best_a && lc < best_c)) {
          best_a = la;
          best_c = lc;
        }
      }
    }
    symmetric = sym_ok;
    pairs = (total - 1) * (total - 1);
    if (best_a < total) {
      first_uncond_a = best_a;
      first_uncond_c = best_c;
    }
  }

  rep.reflexive_on_nonempty = reflexive;
  rep.symmetric = symmetric;
  rep.pairs_checked = pairs;
  // Units make b = a∪c conditioned with both a and c, so transitivity over
  // P(Ω) holds exactly when every non-empty pair is conditioned; the first
  // unconditioned (a,c) yields the witness (a, a∪c, c).
  if (first_uncond_a != 0 || first_uncond_c != 0) {
    rep.transitive = false;
    rep.witness_a = first_uncond_a;
    rep.witness_b = first_uncond_a | first_uncond_c;
    rep.witness_c = first_uncond_c;
  } else {
    rep.transitive = true;
  }
  return rep;
}

}  // namespace grouplogic
