#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplogic/errors.hpp"

namespace grouplogic {

using LIdx = std::uint16_t;

/// Finite lattice with explicit order/meet/join tables and a complement map
/// satisfying a∨a^⊥ = 𝕀 and a∧a^⊥ = ∅.
class FiniteLattice {
 public:
  /// Builds the tables from an order relation given as leq pairs. Throws
  /// Error(Input) if meets/joins fail to exist or complements are invalid.
  static FiniteLattice from_order(
      std::vector<std::string> labels,
      const std::vector<std::pair<LIdx, LIdx>>& leq_pairs,
      const std::vector<std::pair<LIdx, LIdx>>& complement_pairs);

  /// Boolean lattice of subsets of {1..n}; elements indexed by bitmask.
  static FiniteLattice powerset(std::size_t n);

  /// The diamond M₃ (modular, not distributive).
  static FiniteLattice m3();
  /// The pentagon N₅ (not modular).
  static FiniteLattice n5();

  std::size_t size() const { return labels_.size(); }
  const std::string& label(LIdx x) const { return labels_[x]; }
  std::optional<LIdx> index_of(const std::string& label) const;

  bool leq(LIdx a, LIdx b) const { return leq_[a * size() + b]; }
  LIdx meet(LIdx a, LIdx b) const { return meet_[a * size() + b]; }
  LIdx join(LIdx a, LIdx b) const { return join_[a * size() + b]; }
  LIdx complement(LIdx a) const { return complement_[a]; }
  LIdx bottom() const { return bottom_; }
  LIdx top() const { return top_; }

 private:
  FiniteLattice() = default;
  void finish_from_leq();  // derive meet/join/top/bottom, validating

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<LIdx> meet_, join_, complement_;
  LIdx bottom_ = 0, top_ = 0;
};

/// One instance of the modular implication: a ⊆ c ⇒ a∨(b∧c) = (a∨b)∧c.
bool modular_check(const FiniteLattice& l, LIdx a, LIdx b, LIdx c);

/// All violating triples, scanned exhaustively (OpenMP over the outer index,
/// results in lexicographic order).
std::vector<std::array<LIdx, 3>> modular_audit(const FiniteLattice& l,
                                               int jobs = 0);

/// Distributivity a∧(b∨c) = (a∧b)∨(a∧c) over all triples.
std::vector<std::array<LIdx, 3>> distributive_audit(const FiniteLattice& l,
                                                    int jobs = 0);

/// Elements x with a = (a∧x)∨(a∧x^⊥) for every a. The lattice is
/// irreducible exactly when only ∅ and 𝕀 qualify.
std::vector<LIdx> irreducible_elements(const FiniteLattice& l);

struct DimensionViolation {
  enum class Kind { Monotonicity, Valuation } kind;
  LIdx a, b;
  double lhs, rhs;
};

struct DimensionReport {
  std::vector<DimensionViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks d: strict monotonicity on comparable pairs (b ⊊ a ⇒ d(b) < d(a);
/// incomparable pairs are unconstrained) and the valuation law
/// d(a)+d(b) = d(a∧b)+d(a∨b) on all pairs. Values must lie in [0,1].
DimensionReport dimension_check(const FiniteLattice& l,
                                const std::vector<double>& d,
                                double tol = 1e-12);

}  // namespace grouplogic
