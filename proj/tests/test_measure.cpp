#include <doctest.h>

#include <cmath>
#include <random>

#include "grouplogic/measure.hpp"
#include "grouplogic/subsets.hpp"
#include "test_util.hpp"

using namespace grouplogic;
using namespace testutil;

TEST_CASE("counting haar") {
  auto u3 = unit_groupoid(3);
  auto mg = counting_haar(u3, {0.2, 0.3, 0.5});
  for (Idx j = 0; j < 3; ++j) CHECK(mg.mu(j) == mg.lambda(j));

  auto p2 = pair_groupoid(2);
  auto mp = counting_haar(p2, uniform_lambda(*p2));
  for (Idx m = 0; m < 4; ++m) CHECK(mp.mu(m) == 0.5);

  auto z2 = cyclic_group_groupoid(2);
  auto mz = counting_haar(z2, {1.0});
  for (Idx m = 0; m < 2; ++m) CHECK(mz.mu(m) == 1.0);

  CHECK_THROWS_AS(counting_haar(u3, {0.2, -0.1, 0.5}), Error);
  CHECK_THROWS_AS(counting_haar(u3, {0.0, 0.0, 0.0}), Error);
}

TEST_CASE("normalized haar fiber weights") {
  auto p4 = pair_groupoid(4);
  auto mp = normalized_haar(p4, uniform_lambda(*p4));
  for (Idx m = 0; m < p4->morphism_count(); ++m)
    CHECK(mp.fiber_weight(m) == 0.25);

  auto u5 = unit_groupoid(5);
  auto mu = normalized_haar(u5, {0.1, 0.2, 0.3, 0.15, 0.25});
  for (Idx m = 0; m < 5; ++m) CHECK(mu.fiber_weight(m) == 1.0);

  // pair:2 ⊎ units:1, uniform lambda: 1/2 on the pair orbit, 1 on the unit.
  auto g = disjoint_union(*pair_groupoid(2), *unit_groupoid(1));
  auto m = normalized_haar(g, uniform_lambda(*g));
  for (Idx mm = 0; mm < 4; ++mm) CHECK(m.fiber_weight(mm) == 0.5);
  CHECK(m.fiber_weight(4) == 1.0);

  // Every fiber is a probability measure.
  std::mt19937_64 rng(3);
  for (auto gg : {pair_groupoid(3), cyclic_group_groupoid(4),
                  disjoint_union(*pair_groupoid(2), *cyclic_group_groupoid(3))}) {
    auto mgg = normalized_haar(gg, random_prob_lambda(*gg, rng));
    for (Idx j = 0; j < gg->object_count(); ++j) {
      double total = 0.0;
      for (Idx mm : gg->target_fiber(j)) total += mgg.fiber_weight(mm);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("custom haar accepts exactly the left-invariant weights") {
  auto p2 = pair_groupoid(2);
  // weight(j,i) = c(i): depends only on the source.
  std::vector<double> good(4);
  const double c[2] = {0.7, 1.3};
  for (Idx m = 0; m < 4; ++m) good[m] = c[p2->source(m)];
  auto mg = custom_haar(p2, uniform_lambda(*p2), good);
  CHECK(mg.haar_kind() == HaarKind::Custom);

  std::vector<double> bad = good;
  bad[*p2->morphism_index("(1,1)")] = 1.0;
  bad[*p2->morphism_index("(2,1)")] = 2.0;  // same source, different weight
  CHECK_THROWS_WITH_AS(custom_haar(p2, uniform_lambda(*p2), bad),
                       doctest::Contains("left invariance"), Error);

  // Units have no nontrivial compositions: anything positive passes.
  auto u4 = unit_groupoid(4);
  CHECK_NOTHROW(custom_haar(u4, uniform_lambda(*u4), {1.0, 2.0, 3.0, 4.0}));
  CHECK_THROWS_AS(custom_haar(u4, uniform_lambda(*u4), {1.0, 0.0, 3.0, 4.0}),
                  Error);
}

TEST_CASE("left-invariance is equivalent to factoring through the source") {
  std::mt19937_64 rng(17);
  for (auto g : {pair_groupoid(3), unit_groupoid(4), cyclic_group_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *pair_groupoid(2))}) {
    for (int it = 0; it < 30; ++it) {
      std::vector<double> w(g->morphism_count());
      std::uniform_real_distribution<double> dist(0.5, 2.0);
      // Half the trials source-factored, half arbitrary.
      if (it % 2 == 0) {
        std::vector<double> per_source(g->object_count());
        for (auto& v : per_source) v = dist(rng);
        for (Idx m = 0; m < g->morphism_count(); ++m)
          w[m] = per_source[g->source(m)];
      } else {
        for (auto& v : w) v = dist(rng);
      }
      CHECK(!check_left_invariance(*g, w).has_value() ==
            weight_factors_through_source(*g, w));
    }
  }
}

TEST_CASE("modular function") {
  auto p2 = pair_groupoid(2);

  auto uniform = counting_haar(p2, uniform_lambda(*p2));
  for (Idx m = 0; m < 4; ++m) CHECK(uniform.modular(m) == 1.0);

  auto mg = counting_haar(p2, {1.0 / 3.0, 2.0 / 3.0});
  CHECK(mg.modular(*p2->morphism_index("(2,1)")) == 2.0);
  CHECK(mg.modular(*p2->morphism_index("(1,2)")) == 0.5);
  CHECK(mg.modular(*p2->morphism_index("(1,1)")) == 1.0);
  CHECK(mg.modular_total());

  // Homomorphism property, exact on a dyadic lambda.
  auto p4 = pair_groupoid(4);
  auto dyadic = counting_haar(p4, {0.5, 0.25, 0.125, 0.125});
  for (const auto& [a, b, c] : p4->composable_triples())
    CHECK(dyadic.modular(c) == dyadic.modular(a) * dyadic.modular(b));

  // And within 1e-12 for random lambdas.
  std::mt19937_64 rng(29);
  for (auto g : {pair_groupoid(3), cyclic_group_groupoid(3)}) {
    auto m = counting_haar(g, random_prob_lambda(*g, rng));
    for (const auto& [a, b, c] : g->composable_triples()) {
      CHECK(m.modular(c) ==
            doctest::Approx(m.modular(a) * m.modular(b)).epsilon(1e-12));
      CHECK(m.modular(g->inverse(a)) ==
            doctest::Approx(1.0 / m.modular(a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("inversion-invariant representative") {
  auto p2 = pair_groupoid(2);
  auto mg = counting_haar(p2, {1.0 / 3.0, 2.0 / 3.0});
  CHECK(mg.invariant(*p2->morphism_index("(2,1)")) ==
        doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-15));

  // τ_*Λ = Λ holds bitwise by construction, any measure.
  std::mt19937_64 rng(41);
  for (auto g : {pair_groupoid(4), cyclic_group_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *unit_groupoid(2))}) {
    auto m = counting_haar(g, random_prob_lambda(*g, rng));
    for (Idx mm = 0; mm < g->morphism_count(); ++mm)
      CHECK(m.invariant(mm) == m.invariant(g->inverse(mm)));
  }

  // Uniform lambda: Λ coincides with μ.
  auto un = counting_haar(pair_groupoid(3), uniform_lambda(*pair_groupoid(3)));
  for (Idx mm = 0; mm < 9; ++mm)
    CHECK(un.invariant(mm) == doctest::Approx(un.mu(mm)).epsilon(1e-15));

  // Λ(1_j) = μ(1_j).
  auto u3 = unit_groupoid(3);
  auto m3 = counting_haar(u3, {0.2, 0.3, 0.5});
  for (Idx mm = 0; mm < 3; ++mm)
    CHECK(m3.invariant(mm) == doctest::Approx(m3.mu(mm)).epsilon(1e-15));
}

TEST_CASE("disintegration identity on random subsets") {
  std::mt19937_64 rng(53);
  for (auto g : {pair_groupoid(3), unit_groupoid(4), cyclic_group_groupoid(4),
                 disjoint_union(*pair_groupoid(2), *cyclic_group_groupoid(2))}) {
    auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
    for (int it = 0; it < 30; ++it) {
      MorphismSet a = random_morphism_subset(g, rng);
      double direct = 0.0;
      for (Idx m = 0; m < g->morphism_count(); ++m)
        if (a.contains(m)) direct += mg.mu(m);
      double fibered = 0.0;
      for (Idx j = 0; j < g->object_count(); ++j) {
        double nu = 0.0;
        for (Idx m : g->target_fiber(j))
          if (a.contains(m)) nu += mg.fiber_weight(m);
        fibered += mg.lambda(j) * nu;
      }
      CHECK(direct == doctest::Approx(fibered).epsilon(1e-12));
    }
  }
}

TEST_CASE("zeros in lambda") {
  // Unit orbits with zero mass fall back to weight 1 and keep δ defined.
  auto u3 = unit_groupoid(3);
  auto mg = normalized_haar(u3, {0.5, 0.5, 0.0});
  CHECK(mg.fiber_weight(2) == 1.0);
  CHECK(mg.mu(2) == 0.0);
  CHECK(mg.modular(2) == 1.0);
  CHECK(mg.modular_defined(2));
  CHECK(mg.bridge_certified());

  // Λ vanishes exactly where μ vanishes on γ or on γ⁻¹.
  for (Idx m = 0; m < 3; ++m)
    CHECK((mg.invariant(m) == 0.0) ==
          (mg.mu(m) == 0.0 || mg.mu(u3->inverse(m)) == 0.0));

  // A mixed orbit loses certification and has degenerate δ entries.
  auto p2 = pair_groupoid(2);
  auto mixed = normalized_haar(p2, {1.0, 0.0});
  CHECK_FALSE(mixed.bridge_certified());
  Idx m21 = *p2->morphism_index("(2,1)");
  CHECK_FALSE(mixed.modular_defined(m21));
  CHECK(mixed.modular_degenerate(m21));
  CHECK_FALSE(mixed.modular_total());
  // The weights fall back to the uniform fiber measure there.
  CHECK(mixed.fiber_weight(m21) == 0.5);
}
