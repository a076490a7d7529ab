#include "grouplogic/groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace grouplogic {

namespace {

std::size_t env_limit(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

}  // namespace

std::size_t Limits::max_morphisms() {
  return env_limit("GROUPLOGIC_MAX_MORPHISMS", 4096);
}

std::size_t Limits::max_scan_objects() {
  return env_limit("GROUPLOGIC_MAX_SCAN_OBJECTS", 12);
}

std::optional<Idx> FiniteGroupoid::object_index(std::string_view label) const {
  for (Idx j = 0; j < object_labels_.size(); ++j)
    if (object_labels_[j] == label) return j;
  return std::nullopt;
}

std::optional<Idx> FiniteGroupoid::morphism_index(std::string_view label) const {
  for (Idx m = 0; m < morphism_labels_.size(); ++m)
    if (morphism_labels_[m] == label) return m;
  return std::nullopt;
}

std::span<const Idx> FiniteGroupoid::source_fiber(Idx j) const {
  return source_fibers_[j];
}

std::span<const Idx> FiniteGroupoid::target_fiber(Idx j) const {
  return target_fibers_[j];
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

Idx GroupoidBuilder::add_object(std::string label) {
  object_labels_.push_back(std::move(label));
  return static_cast<Idx>(object_labels_.size() - 1);
}

Idx GroupoidBuilder::add_morphism(std::string label, Idx src, Idx tgt) {
  morphism_labels_.push_back(std::move(label));
  source_.push_back(src);
  target_.push_back(tgt);
  return static_cast<Idx>(morphism_labels_.size() - 1);
}

void GroupoidBuilder::set_compose(Idx a, Idx b, Idx result) {
  compose_entries_.push_back({a, b, result});
}

void GroupoidBuilder::set_inverse(Idx m, Idx inv) {
  inverse_pairs_.emplace_back(m, inv);
}

GroupoidPtr GroupoidBuilder::build() && {
  const std::size_t n_obj = object_labels_.size();
  const std::size_t n_mor = morphism_labels_.size();
  if (n_obj == 0) throw_input("groupoid has no objects");
  if (n_mor > Limits::max_morphisms())
    throw_resource("groupoid exceeds morphism cap (" +
                   std::to_string(Limits::max_morphisms()) + "): " +
                   std::to_string(n_mor));

  {
    std::unordered_map<std::string, Idx> seen;
    for (Idx j = 0; j < n_obj; ++j)
      if (!seen.emplace(object_labels_[j], j).second)
        throw_input("duplicate object label: " + object_labels_[j]);
    seen.clear();
    for (Idx m = 0; m < n_mor; ++m)
      if (!seen.emplace(morphism_labels_[m], m).second)
        throw_input("duplicate morphism label: " + morphism_labels_[m]);
  }
  for (Idx m = 0; m < n_mor; ++m) {
    if (source_[m] >= n_obj || target_[m] >= n_obj)
      throw_input("morphism " + morphism_labels_[m] +
                  " references an unknown object");
  }

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->object_labels_ = std::move(object_labels_);
  g->morphism_labels_ = std::move(morphism_labels_);
  g->source_ = std::move(source_);
  g->target_ = std::move(target_);

  g->compose_.assign(n_mor * n_mor, kNoIdx);
  for (const auto& [a, b, c] : compose_entries_) {
    if (a >= n_mor || b >= n_mor || c >= n_mor)
      throw_input("composition entry references an unknown morphism");
    Idx& slot = g->compose_[a * n_mor + b];
    if (slot != kNoIdx && slot != c)
      throw_input("conflicting composition entries for (" +
                  g->morphism_labels_[a] + ", " + g->morphism_labels_[b] + ")");
    slot = c;
  }

  g->inverse_.assign(n_mor, kNoIdx);
  for (const auto& [m, inv] : inverse_pairs_) {
    if (m >= n_mor || inv >= n_mor)
      throw_input("inverse entry references an unknown morphism");
    g->inverse_[m] = inv;
  }
  for (Idx m = 0; m < n_mor; ++m)
    if (g->inverse_[m] == kNoIdx)
      throw_input("no inverse declared for morphism " + g->morphism_labels_[m]);

  g->source_fibers_.resize(n_obj);
  g->target_fibers_.resize(n_obj);
  for (Idx m = 0; m < n_mor; ++m) {
    g->source_fibers_[g->source_[m]].push_back(m);
    g->target_fibers_[g->target_[m]].push_back(m);
  }

  for (Idx a = 0; a < n_mor; ++a)
    for (Idx b = 0; b < n_mor; ++b) {
      Idx c = g->compose_[a * n_mor + b];
      if (c != kNoIdx) g->triples_.push_back({a, b, c});
    }

  // Distinguished unit per object: the idempotent endomorphism that acts as
  // a two-sided identity on its fibers. If no candidate fully qualifies,
  // fall back to a unique idempotent so validate() can report the precise
  // unit-law failures against it.
  g->unit_at_.assign(n_obj, kNoIdx);
  for (Idx j = 0; j < n_obj; ++j) {
    std::vector<Idx> idempotents;
    for (Idx u : g->target_fibers_[j]) {
      if (g->source_[u] != j) continue;
      if (g->compose_[u * n_mor + u] == u) idempotents.push_back(u);
    }
    Idx full = kNoIdx;
    for (Idx u : idempotents) {
      bool two_sided = true;
      for (Idx a : g->source_fibers_[j])
        if (g->compose_[a * n_mor + u] != a) { two_sided = false; break; }
      if (two_sided)
        for (Idx b : g->target_fibers_[j])
          if (g->compose_[u * n_mor + b] != b) { two_sided = false; break; }
      if (two_sided) { full = u; break; }
    }
    if (full != kNoIdx)
      g->unit_at_[j] = full;
    else if (idempotents.size() == 1)
      g->unit_at_[j] = idempotents.front();
  }

  // Orbits by reachability over s/t endpoints.
  g->orbit_of_.assign(n_obj, kNoIdx);
  std::vector<Idx> parent(n_obj);
  for (Idx j = 0; j < n_obj; ++j) parent[j] = j;
  auto find = [&](Idx x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Idx m = 0; m < n_mor; ++m) {
    Idx a = find(g->source_[m]), b = find(g->target_[m]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (Idx j = 0; j < n_obj; ++j) {
    Idx root = find(j);
    if (g->orbit_of_[root] == kNoIdx) {
      g->orbit_of_[root] = static_cast<Idx>(g->orbit_members_.size());
      g->orbit_members_.emplace_back();
    }
    g->orbit_of_[j] = g->orbit_of_[root];
    g->orbit_members_[g->orbit_of_[j]].push_back(j);
  }

  return g;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

const char* to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::CompositionDomain: return "composition-domain";
    case AxiomKind::SourceTargetMismatch: return "source-target-mismatch";
    case AxiomKind::Associativity: return "associativity";
    case AxiomKind::UnitLaw: return "unit-law";
    case AxiomKind::MissingUnit: return "missing-unit";
    case AxiomKind::InverseShape: return "inverse-shape";
    case AxiomKind::InverseLaw: return "inverse-law";
    case AxiomKind::InverseInvolution: return "inverse-involution";
  }
  return "?";
}

std::size_t ValidationReport::count(AxiomKind kind) const {
  std::size_t c = 0;
  for (const auto& v : violations)
    if (v.kind == kind) ++c;
  return c;
}

ValidationReport validate(const FiniteGroupoid& g) {
  ValidationReport report;
  const std::size_t n = g.morphism_count();
  auto label = [&](Idx m) { return g.morphism_label(m); };

  // Defined-ness pattern of the composition table.
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      bool should = g.composable(a, b);
      bool is = g.compose_defined(a, b);
      if (should && !is)
        report.violations.push_back(
            {AxiomKind::CompositionDomain,
             {a, b, kNoIdx},
             label(a) + "∘" + label(b) + " should be defined (s=t match)"});
      else if (!should && is)
        report.violations.push_back(
            {AxiomKind::CompositionDomain,
             {a, b, kNoIdx},
             label(a) + "∘" + label(b) + " defined despite s/t mismatch"});
    }

  // Endpoints of defined compositions.
  for (const auto& [a, b, c] : g.composable_triples()) {
    if (g.source(c) != g.source(b) || g.target(c) != g.target(a))
      report.violations.push_back(
          {AxiomKind::SourceTargetMismatch,
           {a, b, c},
           label(a) + "∘" + label(b) + " = " + label(c) +
               " has wrong endpoints"});
  }

  // Associativity over all triples with both sides defined.
  for (Idx b = 0; b < n; ++b) {
    auto as = g.source_fiber(g.target(b));  // a with s(a) = t(b)
    auto cs = g.target_fiber(g.source(b));  // c with t(c) = s(b)
    for (Idx a : as) {
      Idx ab = g.compose_raw(a, b);
      if (ab == kNoIdx) continue;
      for (Idx c : cs) {
        Idx bc = g.compose_raw(b, c);
        if (bc == kNoIdx) continue;
        Idx lhs = g.compose_raw(ab, c);
        Idx rhs = g.compose_raw(a, bc);
        if (lhs != kNoIdx && rhs != kNoIdx && lhs != rhs)
          report.violations.push_back(
              {AxiomKind::Associativity,
               {a, b, c},
               "(" + label(a) + "∘" + label(b) + ")∘" + label(c) + " = " +
                   label(lhs) + " but " + label(a) + "∘(" + label(b) + "∘" +
                   label(c) + ") = " + label(rhs)});
      }
    }
  }

  // Units.
  for (Idx j = 0; j < g.object_count(); ++j) {
    Idx u = g.unit_at(j);
    if (u == kNoIdx) {
      report.violations.push_back({AxiomKind::MissingUnit,
                                   {j, kNoIdx, kNoIdx},
                                   "no unit determined at object " +
                                       g.object_label(j)});
      continue;
    }
    for (Idx a : g.source_fiber(j))
      if (g.compose_raw(a, u) != a)
        report.violations.push_back(
            {AxiomKind::UnitLaw,
             {a, u, kNoIdx},
             label(a) + "∘" + label(u) + " != " + label(a)});
    for (Idx b : g.target_fiber(j))
      if (g.compose_raw(u, b) != b)
        report.violations.push_back(
            {AxiomKind::UnitLaw,
             {u, b, kNoIdx},
             label(u) + "∘" + label(b) + " != " + label(b)});
  }

  // Inverses.
  for (Idx m = 0; m < n; ++m) {
    Idx inv = g.inverse(m);
    if (g.source(inv) != g.target(m) || g.target(inv) != g.source(m)) {
      report.violations.push_back(
          {AxiomKind::InverseShape,
           {m, inv, kNoIdx},
           label(m) + "⁻¹ = " + label(inv) + " has wrong endpoints"});
      continue;
    }
    if (g.inverse(inv) != m)
      report.violations.push_back(
          {AxiomKind::InverseInvolution,
           {m, inv, kNoIdx},
           "(" + label(m) + "⁻¹)⁻¹ != " + label(m)});
    Idx us = g.unit_at(g.source(m)), ut = g.unit_at(g.target(m));
    if (us != kNoIdx && g.compose_raw(inv, m) != us)
      report.violations.push_back(
          {AxiomKind::InverseLaw,
           {m, inv, kNoIdx},
           label(m) + "⁻¹∘" + label(m) + " != unit at source"});
    if (ut != kNoIdx && g.compose_raw(m, inv) != ut)
      report.violations.push_back(
          {AxiomKind::InverseLaw,
           {m, inv, kNoIdx},
           label(m) + "∘" + label(m) + "⁻¹ != unit at target"});
  }

  return report;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

GroupoidPtr pair_groupoid(std::size_t n) {
  if (n == 0) throw_input("pair groupoid needs at least one object");
  GroupoidBuilder b;
  for (std::size_t j = 1; j <= n; ++j) b.add_object(std::to_string(j));
  // Morphism (j,i): i -> j, laid out row-major by target j.
  auto idx = [n](std::size_t j, std::size_t i) {
    return static_cast<Idx>((j - 1) * n + (i - 1));
  };
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i)
      b.add_morphism("(" + std::to_string(j) + "," + std::to_string(i) + ")",
                     static_cast<Idx>(i - 1), static_cast<Idx>(j - 1));
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 1; i <= n; ++i)
        b.set_compose(idx(k, j), idx(j, i), idx(k, i));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i) b.set_inverse(idx(j, i), idx(i, j));
  return std::move(b).build();
}

GroupoidPtr unit_groupoid(std::size_t n) {
  if (n == 0) throw_input("unit groupoid needs at least one object");
  GroupoidBuilder b;
  for (std::size_t j = 1; j <= n; ++j) b.add_object(std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) {
    Idx m = b.add_morphism("1_" + std::to_string(j), static_cast<Idx>(j - 1),
                           static_cast<Idx>(j - 1));
    b.set_compose(m, m, m);
    b.set_inverse(m, m);
  }
  return std::move(b).build();
}

GroupoidPtr group_groupoid(const std::vector<std::vector<Idx>>& table,
                           std::span<const std::string> element_labels) {
  const std::size_t k = table.size();
  if (k == 0) throw_input("group table is empty");
  for (const auto& row : table) {
    if (row.size() != k) throw_input("group table is not square");
    for (Idx v : row)
      if (v >= k) throw_input("group table entry out of range");
  }
  // Identity: a two-sided one.
  Idx e = kNoIdx;
  for (Idx c = 0; c < k; ++c) {
    bool ok = true;
    for (Idx a = 0; a < k && ok; ++a)
      ok = table[a][c] == a && table[c][a] == a;
    if (ok) { e = c; break; }
  }
  if (e == kNoIdx)
    throw_input("group validation failed: no two-sided identity");
  std::vector<Idx> inv(k, kNoIdx);
  for (Idx a = 0; a < k; ++a) {
    for (Idx x = 0; x < k; ++x)
      if (table[a][x] == e && table[x][a] == e) { inv[a] = x; break; }
    if (inv[a] == kNoIdx)
      throw_input("group validation failed: no inverse for element " +
                    std::to_string(a));
  }
  for (Idx a = 0; a < k; ++a)
    for (Idx bb = 0; bb < k; ++bb)
      for (Idx c = 0; c < k; ++c)
        if (table[table[a][bb]][c] != table[a][table[bb][c]])
          throw_input("group validation failed: non-associative triple (" +
                        std::to_string(a) + "," + std::to_string(bb) + "," +
                        std::to_string(c) + ")");

  GroupoidBuilder b;
  b.add_object("*");
  for (Idx a = 0; a < k; ++a) {
    std::string label = a < element_labels.size() ? element_labels[a]
                                                  : "g" + std::to_string(a);
    b.add_morphism(std::move(label), 0, 0);
  }
  for (Idx a = 0; a < k; ++a)
    for (Idx bb = 0; bb < k; ++bb) b.set_compose(a, bb, table[a][bb]);
  for (Idx a = 0; a < k; ++a) b.set_inverse(a, inv[a]);
  return std::move(b).build();
}

GroupoidPtr cyclic_group_groupoid(std::size_t k) {
  if (k == 0) throw_input("cyclic group order must be positive");
  std::vector<std::vector<Idx>> table(k, std::vector<Idx>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      table[a][b] = static_cast<Idx>((a + b) % k);
  return group_groupoid(table);
}

GroupoidPtr disjoint_union(const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  GroupoidBuilder b;
  for (Idx j = 0; j < g1.object_count(); ++j)
    b.add_object("1:" + g1.object_label(j));
  for (Idx j = 0; j < g2.object_count(); ++j)
    b.add_object("2:" + g2.object_label(j));
  const Idx obj_off = static_cast<Idx>(g1.object_count());
  const Idx mor_off = static_cast<Idx>(g1.morphism_count());
  for (Idx m = 0; m < g1.morphism_count(); ++m)
    b.add_morphism("1:" + g1.morphism_label(m), g1.source(m), g1.target(m));
  for (Idx m = 0; m < g2.morphism_count(); ++m)
    b.add_morphism("2:" + g2.morphism_label(m), g2.source(m) + obj_off,
                   g2.target(m) + obj_off);
  for (const auto& [a, bb, c] : g1.composable_triples()) b.set_compose(a, bb, c);
  for (const auto& [a, bb, c] : g2.composable_triples())
    b.set_compose(a + mor_off, bb + mor_off, c + mor_off);
  for (Idx m = 0; m < g1.morphism_count(); ++m) b.set_inverse(m, g1.inverse(m));
  for (Idx m = 0; m < g2.morphism_count(); ++m)
    b.set_inverse(m + mor_off, g2.inverse(m) + mor_off);
  return std::move(b).build();
}

std::vector<std::vector<Idx>> orbits(const FiniteGroupoid& g) {
  std::vector<std::vector<Idx>> out(g.orbit_count());
  for (Idx o = 0; o < g.orbit_count(); ++o) {
    auto members = g.orbit_members(o);
    out[o].assign(members.begin(), members.end());
  }
  return out;
}

std::vector<Idx> isotropy(const FiniteGroupoid& g, Idx j) {
  if (j >= g.object_count()) throw_input("isotropy: unknown object index");
  std::vector<Idx> out;
  for (Idx m : g.target_fiber(j))
    if (g.source(m) == j) out.push_back(m);
  return out;
}

}  // namespace grouplogic
