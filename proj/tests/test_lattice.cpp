#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "grouplogic/lattice.hpp"

using namespace grouplogic;

TEST_CASE("powerset lattices") {
  auto l1 = FiniteLattice::powerset(1);
  CHECK(l1.size() == 2);
  CHECK(l1.bottom() == 0);
  CHECK(l1.top() == 1);

  auto l2 = FiniteLattice::powerset(2);
  LIdx one = *l2.index_of("{1}");
  LIdx two = *l2.index_of("{2}");
  CHECK(l2.complement(one) == two);

  auto l3 = FiniteLattice::powerset(3);
  CHECK(l3.size() == 8);
  CHECK(distributive_audit(l3).empty());

  CHECK_THROWS_AS(FiniteLattice::powerset(13), Error);
}

TEST_CASE("modular identity") {
  auto l3 = FiniteLattice::powerset(3);
  CHECK(modular_audit(l3).empty());

  // a = ∅ holds trivially for any b, c.
  for (LIdx b = 0; b < l3.size(); ++b)
    for (LIdx c = 0; c < l3.size(); ++c)
      CHECK(modular_check(l3, l3.bottom(), b, c));

  auto m3 = FiniteLattice::m3();
  CHECK(modular_audit(m3).empty());
  CHECK_FALSE(distributive_audit(m3).empty());

  auto n5 = FiniteLattice::n5();
  auto bad = modular_audit(n5);
  CHECK_FALSE(bad.empty());
  // The classical witness: a < c with b incomparable.
  LIdx a = *n5.index_of("a"), b = *n5.index_of("b"), c = *n5.index_of("c");
  CHECK_FALSE(modular_check(n5, a, b, c));
}

TEST_CASE("irreducible elements") {
  auto l3 = FiniteLattice::powerset(3);
  CHECK(irreducible_elements(l3).size() == 8);  // Boolean: everything splits

  auto m3 = FiniteLattice::m3();
  auto irr = irreducible_elements(m3);
  REQUIRE(irr.size() == 2);
  CHECK(irr[0] == m3.bottom());
  CHECK(irr[1] == m3.top());

  // Bottom and top always qualify.
  for (const auto& l : {FiniteLattice::powerset(2), FiniteLattice::n5()}) {
    auto r = irreducible_elements(l);
    CHECK(std::find(r.begin(), r.end(), l.bottom()) != r.end());
    CHECK(std::find(r.begin(), r.end(), l.top()) != r.end());
  }
}

TEST_CASE("complement is an involution and order-reversing on powersets") {
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u}) {
    auto l = FiniteLattice::powerset(n);
    for (LIdx a = 0; a < l.size(); ++a) {
      CHECK(l.complement(l.complement(a)) == a);
      CHECK(l.join(a, l.complement(a)) == l.top());
      CHECK(l.meet(a, l.complement(a)) == l.bottom());
      for (LIdx b = 0; b < l.size(); ++b)
        if (l.leq(a, b)) CHECK(l.leq(l.complement(b), l.complement(a)));
    }
  }
}

TEST_CASE("dimension function checks") {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    auto l = FiniteLattice::powerset(n);
    std::vector<double> d(l.size());
    for (LIdx a = 0; a < l.size(); ++a)
      d[a] = static_cast<double>(std::popcount(static_cast<unsigned>(a))) /
             static_cast<double>(n);
    CHECK(dimension_check(l, d).ok());
  }

  auto l = FiniteLattice::powerset(3);
  std::vector<double> zero(l.size(), 0.0);
  auto rep = dimension_check(l, zero);
  CHECK_FALSE(rep.ok());
  bool monot = false;
  for (const auto& v : rep.violations)
    if (v.kind == DimensionViolation::Kind::Monotonicity) monot = true;
  CHECK(monot);

  // A probability measure with positive weights is a valid dimension.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  double w[3], total = 0.0;
  for (double& x : w) total += x = dist(rng);
  std::vector<double> dm(l.size(), 0.0);
  for (LIdx a = 0; a < l.size(); ++a)
    for (int j = 0; j < 3; ++j)
      if (a & (1 << j)) dm[a] += w[j] / total;
  for (auto& x : dm) x = std::min(x, 1.0);
  CHECK(dimension_check(l, dm, 1e-9).ok());

  std::vector<double> out_of_range(l.size(), 2.0);
  CHECK_THROWS_AS(dimension_check(l, out_of_range), Error);
}

TEST_CASE("from_order rejects non-lattices") {
  // Two maximal elements: no top, joins missing.
  CHECK_THROWS_AS(FiniteLattice::from_order({"0", "a", "b"},
                                            {{0, 1}, {0, 2}},
                                            {{0, 0}, {1, 2}, {2, 1}}),
                  Error);
}
