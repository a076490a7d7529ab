#include <doctest.h>

#include <random>

#include "grouplogic/reference.hpp"
#include "grouplogic/subsets.hpp"
#include "test_util.hpp"

using namespace grouplogic;
using namespace testutil;

TEST_CASE("set product on the unit groupoid is intersection") {
  auto g = unit_groupoid(3);
  MorphismSet a = make_morphism_set(g, {0, 1});  // {1_1, 1_2}
  MorphismSet b = make_morphism_set(g, {1, 2});  // {1_2, 1_3}
  MorphismSet c = set_product(*g, a, b);         // B∘A
  CHECK(c.size() == 1);
  CHECK(c.contains(1));
}

TEST_CASE("set product reproduces the fiber example on pair:2") {
  auto g = pair_groupoid(2);
  ObjectSet a1 = make_object_set(g, {*g->object_index("1")});
  ObjectSet b2 = make_object_set(g, {*g->object_index("2")});
  MorphismSet a = source_fiber(*g, a1);
  MorphismSet b = target_fiber(*g, b2);
  MorphismSet c = set_product(*g, a, b);
  CHECK(c.size() == 1);
  CHECK(c.contains(*g->morphism_index("(2,1)")));
}

TEST_CASE("set product with an empty factor is empty") {
  auto g = pair_groupoid(3);
  MorphismSet a = make_morphism_set(g);
  MorphismSet b = full_morphism_set(g);
  CHECK(set_product(*g, a, b).empty());
  CHECK(set_product(*g, b, a).empty());
}

TEST_CASE("fibers") {
  auto g = pair_groupoid(3);
  ObjectSet a = make_object_set(g, {1});  // object "2"
  CHECK(source_fiber(*g, a).size() == 3);
  CHECK(target_fiber(*g, a).size() == 3);
  CHECK(source_fiber(*g, full_object_set(g)).size() == g->morphism_count());

  auto u = unit_groupoid(4);
  ObjectSet s = make_object_set(u, {0, 2});
  CHECK(source_fiber(*u, s).bits == target_fiber(*u, s).bits);

  // τ(s⁻¹(b)) = t⁻¹(b)
  ObjectSet b = make_object_set(g, {0, 2});
  CHECK(invert_set(source_fiber(*g, b)).bits == target_fiber(*g, b).bits);
}

TEST_CASE("conditioning") {
  auto u = unit_groupoid(4);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    ObjectSet a = random_subset(u, rng), b = random_subset(u, rng);
    CHECK(conditioned(*u, a, b) == !set_intersection(a, b).empty());
  }

  auto p = pair_groupoid(3);
  for (int it = 0; it < 50; ++it) {
    ObjectSet a = random_subset(p, rng), b = random_subset(p, rng);
    CHECK(conditioned(*p, a, b) == (!a.empty() && !b.empty()));
  }

  CHECK_FALSE(conditioned(*p, make_object_set(p), full_object_set(p)));
}

TEST_CASE("conditioning matches the brute-force scan") {
  std::mt19937_64 rng(11);
  for (auto g : {pair_groupoid(3), unit_groupoid(4), cyclic_group_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *unit_groupoid(2))}) {
    for (int it = 0; it < 100; ++it) {
      ObjectSet a = random_subset(g, rng), b = random_subset(g, rng);
      CHECK(conditioned(*g, a, b) == reference::conditioned_brute(*g, a, b));
    }
  }
}

TEST_CASE("mismatched groupoids are rejected") {
  auto g1 = pair_groupoid(2);
  auto g2 = pair_groupoid(2);
  MorphismSet a = full_morphism_set(g1);
  MorphismSet b = full_morphism_set(g2);
  CHECK_THROWS_AS(set_product(*g1, a, b), Error);
}

TEST_CASE("product distributes over disjoint unions of sets") {
  std::mt19937_64 rng(23);
  for (auto g : {pair_groupoid(3), unit_groupoid(4), cyclic_group_groupoid(4),
                 disjoint_union(*pair_groupoid(2), *pair_groupoid(2))}) {
    for (int it = 0; it < 40; ++it) {
      MorphismSet a1 = random_morphism_subset(g, rng);
      MorphismSet a2 = random_morphism_subset(g, rng);
      a2.bits &= ~a1.bits;  // force disjoint
      MorphismSet b = random_morphism_subset(g, rng);
      MorphismSet lhs = set_product(*g, set_union(a1, a2), b);
      MorphismSet rhs =
          set_union(set_product(*g, a1, b), set_product(*g, a2, b));
      CHECK(lhs.bits == rhs.bits);
    }
  }
}

TEST_CASE("product is not commutative on pair:2") {
  auto g = pair_groupoid(2);
  bool witness = false;
  const std::size_t total = 1u << g->morphism_count();
  for (std::uint64_t am = 0; am < total && !witness; ++am)
    for (std::uint64_t bm = 0; bm < total && !witness; ++bm) {
      MorphismSet a{g, Bitset(g->morphism_count(), am)};
      MorphismSet b{g, Bitset(g->morphism_count(), bm)};
      if (set_product(*g, a, b).bits != set_product(*g, b, a).bits)
        witness = true;
    }
  CHECK(witness);
}

TEST_CASE("inversion is an anti-homomorphism on sets") {
  std::mt19937_64 rng(31);
  for (auto g : {pair_groupoid(3), cyclic_group_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *unit_groupoid(1))}) {
    for (int it = 0; it < 40; ++it) {
      MorphismSet a = random_morphism_subset(g, rng);
      MorphismSet b = random_morphism_subset(g, rng);
      // τ(B∘A) = τ(A)∘τ(B)
      CHECK(invert_set(set_product(*g, a, b)).bits ==
            set_product(*g, invert_set(b), invert_set(a)).bits);
    }
  }
}

TEST_CASE("relation report on the unit groupoid") {
  auto rep = relation_report(unit_groupoid(3));
  CHECK(rep.reflexive_on_nonempty);
  CHECK(rep.symmetric);
  CHECK_FALSE(rep.transitive);
  CHECK(rep.witness_a == 0b001);  // {1}
  CHECK(rep.witness_b == 0b011);  // {1,2}
  CHECK(rep.witness_c == 0b010);  // {2}
}

TEST_CASE("relation report on transitive and split fixtures") {
  auto rep = relation_report(pair_groupoid(3));
  CHECK(rep.transitive);
  CHECK(rep.symmetric);

  auto g = disjoint_union(*pair_groupoid(2), *pair_groupoid(2));
  auto rep2 = relation_report(g);
  CHECK_FALSE(rep2.transitive);
  // A valid counterexample: conditioned(a,b), conditioned(b,c), not (a,c).
  ObjectSet a = object_set_from_mask(g, rep2.witness_a);
  ObjectSet b = object_set_from_mask(g, rep2.witness_b);
  ObjectSet c = object_set_from_mask(g, rep2.witness_c);
  CHECK(conditioned(*g, a, b));
  CHECK(conditioned(*g, b, c));
  CHECK_FALSE(conditioned(*g, a, c));
}

TEST_CASE("relation report matches the serial reference") {
  for (auto g : {unit_groupoid(4), pair_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *unit_groupoid(2))}) {
    auto fast = relation_report(g);
    auto slow = reference::relation_report_serial(g);
    CHECK(fast.reflexive_on_nonempty == slow.reflexive_on_nonempty);
    CHECK(fast.symmetric == slow.symmetric);
    CHECK(fast.transitive == slow.transitive);
    CHECK(fast.witness_a == slow.witness_a);
    CHECK(fast.witness_b == slow.witness_b);
    CHECK(fast.witness_c == slow.witness_c);
    CHECK(fast.pairs_checked == slow.pairs_checked);
  }
}

TEST_CASE("a union is always conditioned with its parts") {
  // The lemma behind the transitivity scan: units make b = a∪c a middle
  // term for any non-empty a, c.
  std::mt19937_64 rng(47);
  for (auto g : {unit_groupoid(5), pair_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *unit_groupoid(2))}) {
    for (int it = 0; it < 60; ++it) {
      ObjectSet a = random_subset(g, rng), c = random_subset(g, rng);
      if (a.empty() || c.empty()) continue;
      ObjectSet b = set_union(a, c);
      CHECK(conditioned(*g, a, b));
      CHECK(conditioned(*g, b, c));
    }
  }
}

TEST_CASE("relation scan cap") {
  auto g = unit_groupoid(13);
  CHECK_THROWS_AS(relation_report(g), Error);
  RelationOptions opts;
  opts.allow_sampling = true;
  opts.sample_pairs = 200;
  auto rep = relation_report(g, opts);
  CHECK(rep.sampled);
  CHECK(rep.symmetric);
}
