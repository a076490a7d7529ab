#include "grouplogic/lattice.hpp"

#include <algorithm>

#include "parallel_util.hpp"

namespace grouplogic {

std::optional<LIdx> FiniteLattice::index_of(const std::string& label) const {
  for (LIdx i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

void FiniteLattice::finish_from_leq() {
  const std::size_t n = labels_.size();
  auto is_leq = [&](LIdx a, LIdx b) { return leq_[a * n + b] != 0; };

  // Partial-order sanity.
  for (LIdx a = 0; a < n; ++a) {
    if (!is_leq(a, a)) throw_input("order is not reflexive");
    for (LIdx b = 0; b < n; ++b) {
      if (a != b && is_leq(a, b) && is_leq(b, a))
        throw_input("order is not antisymmetric");
      for (LIdx c = 0; c < n; ++c)
        if (is_leq(a, b) && is_leq(b, c) && !is_leq(a, c))
          throw_input("order is not transitive");
    }
  }

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (LIdx a = 0; a < n; ++a)
    for (LIdx b = 0; b < n; ++b) {
      // Greatest lower bound: the lower bound that dominates every other.
      bool found = false;
      for (LIdx m = 0; m < n && !found; ++m) {
        if (!is_leq(m, a) || !is_leq(m, b)) continue;
        bool greatest = true;
        for (LIdx x = 0; x < n && greatest; ++x)
          if (is_leq(x, a) && is_leq(x, b) && !is_leq(x, m)) greatest = false;
        if (greatest) {
          meet_[a * n + b] = m;
          found = true;
        }
      }
      if (!found)
        throw_input("meet of " + labels_[a] + ", " + labels_[b] +
                    " does not exist");

      found = false;
      for (LIdx m = 0; m < n && !found; ++m) {
        if (!is_leq(a, m) || !is_leq(b, m)) continue;
        bool least = true;
        for (LIdx x = 0; x < n && least; ++x)
          if (is_leq(a, x) && is_leq(b, x) && !is_leq(m, x)) least = false;
        if (least) {
          join_[a * n + b] = m;
          found = true;
        }
      }
      if (!found)
        throw_input("join of " + labels_[a] + ", " + labels_[b] +
                    " does not exist");
    }

  bottom_ = 0;
  top_ = 0;
  for (LIdx x = 0; x < n; ++x) {
    if (is_leq(x, bottom_)) bottom_ = x;
    if (is_leq(top_, x)) top_ = x;
  }
  for (LIdx x = 0; x < n; ++x)
    if (!is_leq(bottom_, x) || !is_leq(x, top_))
      throw_input("order has no bottom/top element");

  if (complement_.size() != n)
    throw_input("complement map must cover every element");
  for (LIdx a = 0; a < n; ++a) {
    LIdx ac = complement_[a];
    if (ac >= n) throw_input("complement entry out of range");
    if (join(a, ac) != top_ || meet(a, ac) != bottom_)
      throw_input("complement of " + labels_[a] +
                  " violates a∨a^⊥ = 𝕀, a∧a^⊥ = ∅");
  }
}

FiniteLattice FiniteLattice::from_order(
    std::vector<std::string> labels,
    const std::vector<std::pair<LIdx, LIdx>>& leq_pairs,
    const std::vector<std::pair<LIdx, LIdx>>& complement_pairs) {
  FiniteLattice l;
  l.labels_ = std::move(labels);
  const std::size_t n = l.labels_.size();
  if (n == 0) throw_input("lattice has no elements");
  if (n > 4096) throw_resource("lattice capped at 4096 elements");
  l.leq_.assign(n * n, 0);
  for (LIdx a = 0; a < n; ++a) l.leq_[a * n + a] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a >= n || b >= n) throw_input("order pair out of range");
    l.leq_[a * n + b] = 1;
  }
  // Transitive closure, so sparse inputs (cover relations) work too.
  for (LIdx k = 0; k < n; ++k)
    for (LIdx a = 0; a < n; ++a)
      if (l.leq_[a * n + k])
        for (LIdx b = 0; b < n; ++b)
          if (l.leq_[k * n + b]) l.leq_[a * n + b] = 1;
  l.complement_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (auto [a, c] : complement_pairs) {
    if (a >= n || c >= n) throw_input("complement pair out of range");
    l.complement_[a] = c;
    seen[a] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!seen[a]) throw_input("complement missing for element " + l.labels_[a]);
  l.finish_from_leq();
  return l;
}

FiniteLattice FiniteLattice::powerset(std::size_t n) {
  if (n > 12) throw_resource("powerset lattice capped at 12 atoms");
  const std::size_t total = 1ull << n;
  FiniteLattice l;
  l.labels_.resize(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1ull << j)) {
        if (!first) s += ",";
        s += std::to_string(j + 1);
        first = false;
      }
    l.labels_[mask] = s + "}";
  }
  l.leq_.assign(total * total, 0);
  l.meet_.assign(total * total, 0);
  l.join_.assign(total * total, 0);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      l.leq_[a * total + b] = (a & ~b) == 0;
      l.meet_[a * total + b] = static_cast<LIdx>(a & b);
      l.join_[a * total + b] = static_cast<LIdx>(a | b);
    }
  l.complement_.resize(total);
  for (std::size_t a = 0; a < total; ++a)
    l.complement_[a] = static_cast<LIdx>(~a & (total - 1));
  l.bottom_ = 0;
  l.top_ = static_cast<LIdx>(total - 1);
  return l;
}

FiniteLattice FiniteLattice::m3() {
  // 0 < x, y, z < 1 with the three middle elements pairwise incomparable.
  return from_order({"0", "x", "y", "z", "1"},
                    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {0, 4}},
                    {{0, 4}, {4, 0}, {1, 2}, {2, 3}, {3, 1}});
}

FiniteLattice FiniteLattice::n5() {
  // 0 < a < c < 1 and 0 < b < 1, with b incomparable to both a and c.
  return from_order({"0", "a", "b", "c", "1"},
                    {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}, {0, 3}, {0, 4},
                     {1, 4}},
                    {{0, 4}, {4, 0}, {1, 2}, {3, 2}, {2, 1}});
}

bool modular_check(const FiniteLattice& l, LIdx a, LIdx b, LIdx c) {
  if (!l.leq(a, c)) return true;  // implication holds vacuously
  return l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c);
}

namespace {

template <typename Pred>
std::vector<std::array<LIdx, 3>> triple_audit(const FiniteLattice& l,
                                              Pred&& ok, int jobs) {
  [[maybe_unused]] const int nthreads = detail::thread_count(jobs);
  const std::size_t n = l.size();
  std::vector<std::vector<std::array<LIdx, 3>>> per_a(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
#endif
  for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(n); ++ai) {
    const LIdx a = static_cast<LIdx>(ai);
    for (LIdx b = 0; b < n; ++b)
      for (LIdx c = 0; c < n; ++c)
        if (!ok(a, b, c)) per_a[a].push_back({a, b, c});
  }
  std::vector<std::array<LIdx, 3>> out;
  for (const auto& chunk : per_a)
    out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace

std::vector<std::array<LIdx, 3>> modular_audit(const FiniteLattice& l,
                                               int jobs) {
  return triple_audit(
      l, [&](LIdx a, LIdx b, LIdx c) { return modular_check(l, a, b, c); },
      jobs);
}

std::vector<std::array<LIdx, 3>> distributive_audit(const FiniteLattice& l,
                                                    int jobs) {
  return triple_audit(
      l,
      [&](LIdx a, LIdx b, LIdx c) {
        return l.meet(a, l.join(b, c)) ==
               l.join(l.meet(a, b), l.meet(a, c));
      },
      jobs);
}

std::vector<LIdx> irreducible_elements(const FiniteLattice& l) {
  std::vector<LIdx> out;
  for (LIdx x = 0; x < l.size(); ++x) {
    bool splits_everything = true;
    for (LIdx a = 0; a < l.size() && splits_everything; ++a)
      splits_everything =
          l.join(l.meet(a, x), l.meet(a, l.complement(x))) == a;
    if (splits_everything) out.push_back(x);
  }
  return out;
}

DimensionReport dimension_check(const FiniteLattice& l,
                                const std::vector<double>& d, double tol) {
  if (d.size() != l.size())
    throw_input("dimension function must cover every element");
  for (double v : d)
    if (!(v >= 0.0 && v <= 1.0))
      throw_input("dimension values must lie in [0,1]");
  DimensionReport rep;
  for (LIdx a = 0; a < l.size(); ++a)
    for (LIdx b = 0; b < l.size(); ++b) {
      if (a != b && l.leq(b, a) && !(d[b] < d[a]))
        rep.violations.push_back(
            {DimensionViolation::Kind::Monotonicity, a, b, d[a], d[b]});
      double lhs = d[a] + d[b];
      double rhs = d[l.meet(a, b)] + d[l.join(a, b)];
      if (std::abs(lhs - rhs) > tol)
        rep.violations.push_back(
            {DimensionViolation::Kind::Valuation, a, b, lhs, rhs});
    }
  return rep;
}

}  // namespace grouplogic
