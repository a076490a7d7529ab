#include <doctest.h>

#include <random>

#include "grouplogic/gns.hpp"
#include "grouplogic/reference.hpp"
#include "test_util.hpp"

// The OpenMP kernels must give identical results for any thread count and
// agree with their serial twins.

using namespace grouplogic;
using namespace testutil;

TEST_CASE("sorkin audit is deterministic across thread counts") {
  std::mt19937_64 rng(101);
  auto g = disjoint_union(*pair_groupoid(3), *unit_groupoid(2));
  auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
  auto phase = phase_from_potential(g, random_potential(*g, rng));
  auto one = sorkin_audit(mg, &phase, 1);
  auto two = sorkin_audit(mg, &phase, 2);
  auto many = sorkin_audit(mg, &phase, 4);
  CHECK(one.max_residual == two.max_residual);
  CHECK(one.max_residual == many.max_residual);
  CHECK(one.worst_a == two.worst_a);
  CHECK(one.worst_b == many.worst_b);
  CHECK(one.worst_c == many.worst_c);
  CHECK(one.triples == two.triples);
}

TEST_CASE("mu2 and decoherence tables are deterministic") {
  std::mt19937_64 rng(103);
  auto g = pair_groupoid(4);
  auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
  auto phase = phase_from_potential(g, random_potential(*g, rng));
  CHECK(mu2_table(mg, &phase, 1) == mu2_table(mg, &phase, 3));
  CHECK(decoherence_table(mg, &phase, 1) == decoherence_table(mg, &phase, 3));
}

TEST_CASE("relation report is deterministic and matches the twin") {
  auto g = disjoint_union(*pair_groupoid(3), *pair_groupoid(2));
  RelationOptions one;
  one.jobs = 1;
  RelationOptions four;
  four.jobs = 4;
  auto a = relation_report(g, one);
  auto b = relation_report(g, four);
  CHECK(a.symmetric == b.symmetric);
  CHECK(a.transitive == b.transitive);
  CHECK(a.witness_a == b.witness_a);
  CHECK(a.witness_b == b.witness_b);
  CHECK(a.witness_c == b.witness_c);

  auto slow = reference::relation_report_serial(g);
  CHECK(a.witness_a == slow.witness_a);
  CHECK(a.witness_c == slow.witness_c);
}

TEST_CASE("gram assembly is deterministic across thread counts") {
  std::mt19937_64 rng(107);
  auto g = pair_groupoid(5);
  auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
  auto one = gram(mg, 1);
  auto four = gram(mg, 4);
  CHECK(one.entries == four.entries);
  CHECK(one.entries == reference::gram_serial(mg).entries);
}

TEST_CASE("support law kernel is deterministic and matches the literal tier") {
  auto u10 = unit_groupoid(10);
  auto mg = normalized_haar(u10, uniform_lambda(*u10));
  auto one = support_law_audit_exhaustive(mg, 1);
  auto four = support_law_audit_exhaustive(mg, 4);
  CHECK(one.violations == four.violations);
  CHECK(one.pairs_checked == four.pairs_checked);
  CHECK(one.mode == "exhaustive-kernel");

  auto p3 = pair_groupoid(3);
  auto m3 = normalized_haar(p3, uniform_lambda(*p3));
  auto literal = support_law_audit_exhaustive(m3, 2);
  CHECK(literal.mode == "exhaustive-literal");
  CHECK(literal.violations == 0);
}

TEST_CASE("axiom audit is deterministic") {
  std::mt19937_64 rng(109);
  auto g = pair_groupoid(3);
  auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
  auto phase = phase_from_potential(g, random_potential(*g, rng));
  auto a = decoherence_axiom_audit(mg, &phase, 1e-12, 1);
  auto b = decoherence_axiom_audit(mg, &phase, 1e-12, 4);
  CHECK(a.max_hermiticity_dev == b.max_hermiticity_dev);
  CHECK(a.max_biadditivity_dev == b.max_biadditivity_dev);
  CHECK(a.min_diagonal == b.min_diagonal);
}

TEST_CASE("bridge audit is deterministic") {
  std::mt19937_64 rng(113);
  auto g = cyclic_group_groupoid(3);
  auto mg = normalized_haar(g, random_prob_lambda(*g, rng));
  auto a = bridge_audit(mg, 1);
  auto b = bridge_audit(mg, 4);
  CHECK(a.max_deviation == b.max_deviation);
  CHECK(a.worst_a == b.worst_a);
  CHECK(a.worst_b == b.worst_b);
}
