#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "grouplogic/groupoid.hpp"

namespace grouplogic {

using Bitset = boost::dynamic_bitset<>;

/// Subset of the object set Ω of a fixed groupoid.
struct ObjectSet {
  GroupoidPtr g;
  Bitset bits;

  bool empty() const { return bits.none(); }
  std::size_t size() const { return bits.count(); }
  bool contains(Idx j) const { return bits.test(j); }
  std::string label() const;  // "{1,3}" style, for reports
};

/// Subset of the morphism set G of a fixed groupoid.
struct MorphismSet {
  GroupoidPtr g;
  Bitset bits;

  bool empty() const { return bits.none(); }
  std::size_t size() const { return bits.count(); }
  bool contains(Idx m) const { return bits.test(m); }
  std::string label() const;
};

ObjectSet make_object_set(GroupoidPtr g, std::initializer_list<Idx> objs = {});
ObjectSet make_object_set(GroupoidPtr g, const std::vector<Idx>& objs);
ObjectSet object_set_from_mask(GroupoidPtr g, std::uint64_t mask);
ObjectSet full_object_set(GroupoidPtr g);
MorphismSet make_morphism_set(GroupoidPtr g,
                              std::initializer_list<Idx> mors = {});
MorphismSet make_morphism_set(GroupoidPtr g, const std::vector<Idx>& mors);
MorphismSet full_morphism_set(GroupoidPtr g);

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b);
ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b);
ObjectSet set_complement(const ObjectSet& a);
bool disjoint(const ObjectSet& a, const ObjectSet& b);
MorphismSet set_union(const MorphismSet& a, const MorphismSet& b);
MorphismSet set_intersection(const MorphismSet& a, const MorphismSet& b);
MorphismSet set_complement(const MorphismSet& a);

/// Pointwise inversion τ(A) = {α⁻¹ : α ∈ A}.
MorphismSet invert_set(const MorphismSet& a);

/// Subset product in the orientation C = B∘A: all β∘α with β ∈ B, α ∈ A and
/// s(β) = t(α). Loops run over per-object fiber indices, so the cost tracks
/// the number of actually composable pairs.
MorphismSet set_product(const FiniteGroupoid& g, const MorphismSet& a,
                        const MorphismSet& b);

/// s⁻¹(a): morphisms whose source lies in a.
MorphismSet source_fiber(const FiniteGroupoid& g, const ObjectSet& a);
/// t⁻¹(b): morphisms whose target lies in b.
MorphismSet target_fiber(const FiniteGroupoid& g, const ObjectSet& b);

/// a and b are conditioned when t⁻¹(b)∘s⁻¹(a) is non-empty, i.e. some
/// morphism runs from a point of a to a point of b.
bool conditioned(const FiniteGroupoid& g, const ObjectSet& a,
                 const ObjectSet& b);

// ---------------------------------------------------------------------------
// Relation audit over P(Ω)
// ---------------------------------------------------------------------------

struct RelationOptions {
  std::size_t cap = Limits::max_scan_objects();
  bool allow_sampling = false;  // beyond the cap: sample instead of erroring
  std::size_t sample_pairs = 20000;
  std::uint64_t seed = 0x5eed;
  int jobs = 0;  // 0 = library default thread count
};

struct RelationReport {
  bool reflexive_on_nonempty = false;
  bool symmetric = false;
  bool transitive = false;
  bool sampled = false;
  std::uint64_t pairs_checked = 0;
  // First (lexicographically by subset mask) transitivity counterexample,
  // as object masks; meaningful when !transitive.
  std::uint64_t witness_a = 0, witness_b = 0, witness_c = 0;
};

/// Scans the conditioning relation over all non-empty subsets of Ω
/// (exhaustively up to the cap). Parallelised with OpenMP; results are
/// deterministic regardless of thread count.
RelationReport relation_report(GroupoidPtr g, const RelationOptions& opts = {});

}  // namespace grouplogic
