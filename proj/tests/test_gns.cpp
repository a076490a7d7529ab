#include <doctest.h>

#include <cmath>
#include <random>

#include "grouplogic/gns.hpp"
#include "grouplogic/reference.hpp"
#include "test_util.hpp"

using namespace grouplogic;
using namespace testutil;

TEST_CASE("jacobi eigenvalues on a known matrix") {
  std::vector<double> m = {2.0, 1.0, 1.0, 2.0};
  auto eig = jacobi_eigenvalues(m, 2);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == doctest::Approx(1.0));
  CHECK(eig[1] == doctest::Approx(3.0));

  auto none = jacobi_eigenvalues({}, 0);
  CHECK(none.empty());
}

TEST_CASE("gram of a unit groupoid is diagonal in lambda") {
  auto u3 = unit_groupoid(3);
  std::mt19937_64 rng(1);
  auto lambda = random_prob_lambda(*u3, rng);
  auto mg = normalized_haar(u3, lambda);
  auto gm = gram(mg);
  for (Idx i = 0; i < 3; ++i)
    for (Idx j = 0; j < 3; ++j) {
      if (i == j)
        CHECK(gm.at(i, j).real() == doctest::Approx(lambda[i]));
      else
        CHECK(std::abs(gm.at(i, j)) == 0.0);
    }
}

TEST_CASE("gram of a pair groupoid has one rank-1 block per target fiber") {
  const std::size_t n = 3;
  auto p = pair_groupoid(n);
  auto mg = normalized_haar(p, uniform_lambda(*p));
  auto gm = gram(mg);
  double block = 1.0 / static_cast<double>(n * n * n);
  for (Idx a = 0; a < p->morphism_count(); ++a)
    for (Idx b = 0; b < p->morphism_count(); ++b) {
      double expected = p->target(a) == p->target(b) ? block : 0.0;
      CHECK(gm.at(a, b).real() == doctest::Approx(expected).epsilon(1e-12));
      CHECK(gm.at(a, b).imag() == 0.0);
    }
  CHECK(gns_dimension(mg) == n);
}

TEST_CASE("one-morphism groupoid") {
  auto p1 = pair_groupoid(1);
  auto mg = normalized_haar(p1, {1.0});
  auto gm = gram(mg);
  CHECK(gm.at(0, 0).real() == doctest::Approx(1.0));
  CHECK(gns_dimension(mg) == 1);
}

TEST_CASE("gram is hermitian and positive semi-definite") {
  std::mt19937_64 rng(3);
  for (auto g : {unit_groupoid(4), pair_groupoid(3), cyclic_group_groupoid(3),
                 disjoint_union(*pair_groupoid(2), *cyclic_group_groupoid(2))}) {
    auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
    auto gm = gram(mg);
    CHECK(gm.max_hermiticity_dev() < 1e-12);
    auto eig = gram_eigenvalues(gm);
    CHECK(eig.front() > -1e-10);
  }
}

TEST_CASE("quadratic form consistency with the state") {
  std::mt19937_64 rng(5);
  for (auto g : {unit_groupoid(3), pair_groupoid(3), cyclic_group_groupoid(3)}) {
    auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
    auto gm = gram(mg);
    for (int it = 0; it < 20; ++it) {
      auto f = random_function(g, rng);
      Complex direct = state(mg, convolve(mg, involution(mg, f), f));
      Complex quad{0.0, 0.0};
      for (Idx a = 0; a < g->morphism_count(); ++a)
        for (Idx b = 0; b < g->morphism_count(); ++b)
          quad += std::conj(f.coeff[a]) * gm.at(a, b) * f.coeff[b];
      CHECK(std::abs(direct - quad) < 1e-12);
    }
  }
}

TEST_CASE("gelfand ideal membership") {
  auto u3 = unit_groupoid(3);
  auto mg = normalized_haar(u3, {0.5, 0.5, 0.0});
  CHECK(in_gelfand_ideal(mg, zero_function(u3)));
  CHECK(in_gelfand_ideal(mg, delta_function(u3, 2)));
  CHECK_FALSE(in_gelfand_ideal(mg, delta_function(u3, 0)));

  auto p2 = pair_groupoid(2);
  auto mp = normalized_haar(p2, uniform_lambda(*p2));
  auto f = subtract(delta_function(p2, *p2->morphism_index("(1,1)")),
                    delta_function(p2, *p2->morphism_index("(1,2)")));
  CHECK(in_gelfand_ideal(mp, f));
}

TEST_CASE("the ideal is a left ideal") {
  std::mt19937_64 rng(7);
  auto p2 = pair_groupoid(2);
  auto mg = normalized_haar(p2, uniform_lambda(*p2));
  auto f = subtract(delta_function(p2, *p2->morphism_index("(1,1)")),
                    delta_function(p2, *p2->morphism_index("(1,2)")));
  REQUIRE(in_gelfand_ideal(mg, f));
  for (int it = 0; it < 20; ++it) {
    auto g = random_function(p2, rng);
    CHECK(in_gelfand_ideal(mg, convolve(mg, g, f), 1e-10));
  }
}

TEST_CASE("gns dimension across fixtures") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto p = pair_groupoid(n);
    CHECK(gns_dimension(normalized_haar(p, uniform_lambda(*p))) == n);
  }

  auto u5 = unit_groupoid(5);
  CHECK(gns_dimension(normalized_haar(u5, {0.25, 0.25, 0.0, 0.5, 0.0})) == 3);

  // The state integrates against μ over all morphisms, so for a group the
  // kernel contains every difference δ_a - δ_b: one GNS dimension.
  auto z2 = cyclic_group_groupoid(2);
  auto mz = normalized_haar(z2, {1.0});
  CHECK(gns_dimension(mz) == 1);
  CHECK(in_gelfand_ideal(mz, subtract(delta_function(z2, 0),
                                      delta_function(z2, 1))));
}

TEST_CASE("null set correspondence") {
  auto u3 = unit_groupoid(3);
  auto mg = normalized_haar(u3, {0.5, 0.5, 0.0});

  auto empty = null_set_correspondence(mg, make_object_set(u3));
  CHECK(empty.mu2 == 0.0);
  CHECK(empty.in_ideal);
  CHECK(empty.consistent);

  auto atom3 = null_set_correspondence(mg, make_object_set(u3, {2}));
  CHECK(atom3.mu2 == 0.0);
  CHECK(atom3.in_ideal);
  CHECK(atom3.consistent);

  auto p2 = pair_groupoid(2);
  auto mp = normalized_haar(p2, uniform_lambda(*p2));
  auto atom1 = null_set_correspondence(mp, make_object_set(p2, {0}));
  CHECK(atom1.mu2 == doctest::Approx(0.25));
  CHECK_FALSE(atom1.in_ideal);
  CHECK(atom1.consistent);
}

TEST_CASE("gram matches the serial reference bitwise") {
  std::mt19937_64 rng(11);
  auto g = pair_groupoid(4);
  auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
  auto a = gram(mg);
  auto b = reference::gram_serial(mg);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    CHECK(a.entries[i] == b.entries[i]);
}

TEST_CASE("gns report") {
  auto u3 = unit_groupoid(3);
  auto rep = gns_report(normalized_haar(u3, {0.5, 0.5, 0.0}));
  CHECK(rep.dimension == 2);
  CHECK(rep.certified);
  REQUIRE(rep.atoms.size() == 3);
  CHECK(rep.atoms[2].in_ideal);
  CHECK_FALSE(rep.atoms[0].in_ideal);
}
