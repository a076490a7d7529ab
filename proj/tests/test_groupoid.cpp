#include <doctest.h>

#include "grouplogic/groupoid.hpp"

using namespace grouplogic;

namespace {

// pair:2 with (2,1)∘(1,1) redirected to (2,2): the standard broken fixture.
GroupoidPtr broken_pair2() {
  auto g = pair_groupoid(2);
  GroupoidBuilder b;
  for (Idx j = 0; j < g->object_count(); ++j) b.add_object(g->object_label(j));
  for (Idx m = 0; m < g->morphism_count(); ++m)
    b.add_morphism(g->morphism_label(m), g->source(m), g->target(m));
  Idx m21 = *g->morphism_index("(2,1)");
  Idx m11 = *g->morphism_index("(1,1)");
  Idx m22 = *g->morphism_index("(2,2)");
  for (const auto& [x, y, z] : g->composable_triples()) {
    if (x == m21 && y == m11)
      b.set_compose(x, y, m22);
    else
      b.set_compose(x, y, z);
  }
  for (Idx m = 0; m < g->morphism_count(); ++m) b.set_inverse(m, g->inverse(m));
  return std::move(b).build();
}

}  // namespace

TEST_CASE("pair groupoid construction") {
  auto g1 = pair_groupoid(1);
  CHECK(g1->object_count() == 1);
  CHECK(g1->morphism_count() == 1);

  auto g2 = pair_groupoid(2);
  CHECK(g2->morphism_count() == 4);
  Idx m21 = *g2->morphism_index("(2,1)");
  Idx m12 = *g2->morphism_index("(1,2)");
  Idx m22 = *g2->morphism_index("(2,2)");
  // (2,1)∘(1,2) = (2,2)
  CHECK(g2->compose(m21, m12) == m22);
  CHECK(g2->source(m21) == *g2->object_index("1"));
  CHECK(g2->target(m21) == *g2->object_index("2"));
  CHECK(g2->inverse(m21) == m12);

  auto g3 = pair_groupoid(3);
  CHECK(validate(*g3).ok());
  for (Idx j = 0; j < 3; ++j) CHECK(g3->target_fiber(j).size() == 3);

  CHECK_THROWS_AS(pair_groupoid(0), Error);
}

TEST_CASE("unit groupoid construction") {
  auto g = unit_groupoid(3);
  CHECK(g->morphism_count() == 3);
  for (Idx a = 0; a < 3; ++a)
    for (Idx b = 0; b < 3; ++b)
      CHECK(g->compose_defined(a, b) == (a == b));

  auto g1 = unit_groupoid(1);
  auto p1 = pair_groupoid(1);
  CHECK(g1->object_count() == p1->object_count());
  CHECK(g1->morphism_count() == p1->morphism_count());

  auto g4 = unit_groupoid(4);
  for (Idx j = 0; j < 4; ++j) CHECK(isotropy(*g4, j).size() == 1);

  CHECK_THROWS_AS(unit_groupoid(0), Error);
}

TEST_CASE("group groupoid from a Cayley table") {
  auto z2 = cyclic_group_groupoid(2);
  CHECK(z2->object_count() == 1);
  CHECK(z2->morphism_count() == 2);
  CHECK(validate(*z2).ok());

  auto z3 = cyclic_group_groupoid(3);
  CHECK(isotropy(*z3, 0).size() == 3);

  // Z4 with table[1][1] and table[1][2] swapped: identity and inverses
  // survive, associativity does not ((1∘1)∘2 = 1 but 1∘(1∘2) = 2).
  std::vector<std::vector<Idx>> bad = {
      {0, 1, 2, 3}, {1, 3, 2, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  CHECK_THROWS_WITH_AS(group_groupoid(bad),
                       doctest::Contains("non-associative"), Error);
}

TEST_CASE("disjoint unions") {
  auto u = disjoint_union(*unit_groupoid(1), *unit_groupoid(1));
  CHECK(u->object_count() == 2);
  CHECK(u->morphism_count() == 2);
  CHECK(validate(*u).ok());
  CHECK(orbits(*u).size() == 2);

  auto pp = disjoint_union(*pair_groupoid(2), *pair_groupoid(2));
  CHECK(pp->morphism_count() == 8);
  CHECK(orbits(*pp).size() == 2);
  CHECK(validate(*pp).ok());

  auto pu = disjoint_union(*pair_groupoid(2), *unit_groupoid(1));
  CHECK(validate(*pu).ok());
}

TEST_CASE("orbits and isotropy") {
  auto p3 = pair_groupoid(3);
  auto orb = orbits(*p3);
  REQUIRE(orb.size() == 1);
  CHECK(orb[0].size() == 3);
  for (Idx j = 0; j < 3; ++j) CHECK(isotropy(*p3, j).size() == 1);

  auto u3 = unit_groupoid(3);
  CHECK(orbits(*u3).size() == 3);

  auto z2 = cyclic_group_groupoid(2);
  CHECK(orbits(*z2).size() == 1);
  CHECK(isotropy(*z2, 0).size() == z2->morphism_count());

  CHECK_THROWS_AS(isotropy(*u3, 7), Error);
}

TEST_CASE("validate flags the redirected composition precisely") {
  auto g = broken_pair2();
  auto report = validate(*g);
  CHECK_FALSE(report.ok());
  // One unit-law instance: (2,1)∘1_1 lands on (2,2). The redirect also
  // breaks one endpoint check and two associativity triples (hand count:
  // ((1,2),(2,1),(1,1)) and ((2,1),(1,2),(2,1))).
  CHECK(report.count(AxiomKind::UnitLaw) == 1);
  CHECK(report.count(AxiomKind::SourceTargetMismatch) == 1);
  CHECK(report.count(AxiomKind::Associativity) == 2);
  CHECK(report.count(AxiomKind::InverseLaw) == 0);
}

TEST_CASE("validate passes every builtin") {
  CHECK(validate(*pair_groupoid(4)).ok());
  CHECK(validate(*unit_groupoid(5)).ok());
  CHECK(validate(*cyclic_group_groupoid(4)).ok());
  CHECK(validate(*disjoint_union(*pair_groupoid(3), *cyclic_group_groupoid(2)))
            .ok());
}

TEST_CASE("builder rejects structural garbage") {
  GroupoidBuilder b;
  b.add_object("x");
  b.add_morphism("m", 0, 0);
  b.set_compose(0, 0, 3);  // unknown morphism
  b.set_inverse(0, 0);
  CHECK_THROWS_WITH_AS(std::move(b).build(), doctest::Contains("unknown"),
                       Error);

  GroupoidBuilder dup;
  dup.add_object("x");
  dup.add_object("x");
  CHECK_THROWS_WITH_AS(std::move(dup).build(), doctest::Contains("duplicate"),
                       Error);
}

TEST_CASE("groupoid invariants by enumeration") {
  for (auto g : {pair_groupoid(3), unit_groupoid(4), cyclic_group_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *pair_groupoid(2))}) {
    // α⁻¹∘α = 1_{s(α)} and α∘α⁻¹ = 1_{t(α)}.
    for (Idx m = 0; m < g->morphism_count(); ++m) {
      CHECK(g->compose(g->inverse(m), m) == g->unit_at(g->source(m)));
      CHECK(g->compose(m, g->inverse(m)) == g->unit_at(g->target(m)));
      CHECK(g->inverse(g->inverse(m)) == m);
    }
    // Left multiplication is a bijection G^{s(α)} -> G^{t(α)}.
    for (Idx alpha = 0; alpha < g->morphism_count(); ++alpha) {
      auto from = g->target_fiber(g->source(alpha));
      auto to = g->target_fiber(g->target(alpha));
      std::vector<bool> hit(g->morphism_count(), false);
      for (Idx beta : from) {
        auto image = g->compose(alpha, beta);
        REQUIRE(image.has_value());
        CHECK(g->target(*image) == g->target(alpha));
        CHECK_FALSE(hit[*image]);
        hit[*image] = true;
      }
      std::size_t covered = 0;
      for (Idx m : to)
        if (hit[m]) ++covered;
      CHECK(covered == from.size());
      CHECK(from.size() == to.size());
    }
    // Fiber sizes agree across each orbit.
    for (Idx o = 0; o < g->orbit_count(); ++o) {
      auto members = g->orbit_members(o);
      for (Idx j : members)
        CHECK(g->target_fiber(j).size() ==
              g->target_fiber(members.front()).size());
    }
  }
}

TEST_CASE("morphism cap is enforced") {
  CHECK_THROWS_AS(pair_groupoid(65), Error);  // 65^2 > 4096
}
