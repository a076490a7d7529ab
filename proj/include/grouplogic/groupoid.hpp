#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouplogic/errors.hpp"

namespace grouplogic {

using Idx = std::uint32_t;
inline constexpr Idx kNoIdx = static_cast<Idx>(-1);

/// Runtime size caps, overridable through environment variables.
struct Limits {
  /// GROUPLOGIC_MAX_MORPHISMS, default 4096.
  static std::size_t max_morphisms();
  /// GROUPLOGIC_MAX_SCAN_OBJECTS, default 12. Caps exhaustive subset scans.
  static std::size_t max_scan_objects();
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// A finite groupoid held as explicit tables: morphisms with source/target
/// maps into a finite object set, a partial composition table, a total
/// inverse map, and one distinguished unit per object.
///
/// The tables are allowed to describe something that is *not* a groupoid;
/// validate() reports every violated axiom instance. Structural problems
/// (dangling indices, duplicate labels) are rejected at build time instead.
class FiniteGroupoid {
 public:
  std::size_t object_count() const { return object_labels_.size(); }
  std::size_t morphism_count() const { return source_.size(); }

  const std::string& object_label(Idx j) const { return object_labels_[j]; }
  const std::string& morphism_label(Idx m) const { return morphism_labels_[m]; }
  std::optional<Idx> object_index(std::string_view label) const;
  std::optional<Idx> morphism_index(std::string_view label) const;

  Idx source(Idx m) const { return source_[m]; }
  Idx target(Idx m) const { return target_[m]; }
  Idx inverse(Idx m) const { return inverse_[m]; }

  /// True when the composition a∘b exists in the table.
  bool compose_defined(Idx a, Idx b) const {
    return compose_[a * morphism_count() + b] != kNoIdx;
  }
  /// a∘b ("first b, then a"); kNoIdx when undefined.
  Idx compose_raw(Idx a, Idx b) const {
    return compose_[a * morphism_count() + b];
  }
  std::optional<Idx> compose(Idx a, Idx b) const {
    Idx c = compose_raw(a, b);
    if (c == kNoIdx) return std::nullopt;
    return c;
  }
  bool composable(Idx a, Idx b) const { return source_[a] == target_[b]; }

  /// Unit morphism at object j; kNoIdx when the tables do not determine one.
  Idx unit_at(Idx j) const { return unit_at_[j]; }

  /// G_j: morphisms with source j.
  std::span<const Idx> source_fiber(Idx j) const;
  /// G^j: morphisms with target j.
  std::span<const Idx> target_fiber(Idx j) const;

  /// All (a, b, a∘b) with the composition defined, ordered by (a, b).
  std::span<const std::array<Idx, 3>> composable_triples() const {
    return triples_;
  }

  // Connectivity. Objects are in the same orbit when a chain of morphisms
  // joins them (direction irrelevant: inverses are part of the data).
  std::size_t orbit_count() const { return orbit_members_.size(); }
  Idx orbit_of(Idx j) const { return orbit_of_[j]; }
  std::span<const Idx> orbit_members(Idx orbit) const {
    return orbit_members_[orbit];
  }

 private:
  friend class GroupoidBuilder;
  FiniteGroupoid() = default;

  std::vector<std::string> object_labels_;
  std::vector<std::string> morphism_labels_;
  std::vector<Idx> source_, target_, inverse_, unit_at_;
  std::vector<Idx> compose_;  // dense |G| x |G| table, kNoIdx = undefined
  std::vector<std::vector<Idx>> source_fibers_, target_fibers_;
  std::vector<std::array<Idx, 3>> triples_;
  std::vector<Idx> orbit_of_;
  std::vector<std::vector<Idx>> orbit_members_;
};

/// Assembles the raw tables and runs the structural checks. Axioms are not
/// enforced here; feed the result to validate() for that.
class GroupoidBuilder {
 public:
  Idx add_object(std::string label);
  Idx add_morphism(std::string label, Idx src, Idx tgt);
  void set_compose(Idx a, Idx b, Idx result);
  void set_inverse(Idx m, Idx inv);

  /// Throws Error(Input) on structural problems and Error(Resource) when the
  /// morphism cap is exceeded.
  GroupoidPtr build() &&;

 private:
  std::vector<std::string> object_labels_;
  std::vector<std::string> morphism_labels_;
  std::vector<Idx> source_, target_;
  std::vector<std::pair<Idx, Idx>> inverse_pairs_;
  std::vector<std::array<Idx, 3>> compose_entries_;
};

// ---------------------------------------------------------------------------
// Axiom validation
// ---------------------------------------------------------------------------

enum class AxiomKind {
  CompositionDomain,     // defined-ness disagrees with s(a) = t(b)
  SourceTargetMismatch,  // s(a∘b) != s(b) or t(a∘b) != t(a)
  Associativity,         // both sides defined and unequal
  UnitLaw,               // α∘1_i != α or 1_j∘α != α
  MissingUnit,           // no (or no unique) unit candidate at an object
  InverseShape,          // s(α⁻¹) != t(α) or t(α⁻¹) != s(α)
  InverseLaw,            // α⁻¹∘α != 1_s(α) or α∘α⁻¹ != 1_t(α)
  InverseInvolution,     // (α⁻¹)⁻¹ != α
};

const char* to_string(AxiomKind kind);

struct AxiomViolation {
  AxiomKind kind;
  // Participating morphism (or object, for MissingUnit) indices; unused
  // slots hold kNoIdx.
  std::array<Idx, 3> who{kNoIdx, kNoIdx, kNoIdx};
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(AxiomKind kind) const;
};

/// Checks every groupoid axiom instance by enumeration.
ValidationReport validate(const FiniteGroupoid& g);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Groupoid of pairs over n objects: morphisms (j,i), composition
/// (k,j)∘(j,i) = (k,i), units (i,i), inverse (j,i)⁻¹ = (i,j).
GroupoidPtr pair_groupoid(std::size_t n);

/// A set seen as a groupoid: units only, each composable just with itself.
GroupoidPtr unit_groupoid(std::size_t n);

/// One-object groupoid from a group's Cayley table. table[a][b] is the index
/// of a∘b; the table is checked to be a group first (associativity, a
/// two-sided identity, inverses).
GroupoidPtr group_groupoid(const std::vector<std::vector<Idx>>& table,
                           std::span<const std::string> element_labels = {});

/// Cyclic group of order k as a one-object groupoid.
GroupoidPtr cyclic_group_groupoid(std::size_t k);

/// Disjoint union; labels are prefixed "1:" and "2:" to stay unique.
GroupoidPtr disjoint_union(const FiniteGroupoid& g1, const FiniteGroupoid& g2);

/// Partition of the object set by reachability, as lists of object indices
/// (ordered by smallest member).
std::vector<std::vector<Idx>> orbits(const FiniteGroupoid& g);

/// Isotropy group at j: all morphisms with source and target j.
std::vector<Idx> isotropy(const FiniteGroupoid& g, Idx j);

}  // namespace grouplogic
