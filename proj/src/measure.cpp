#include "grouplogic/measure.hpp"

#include <cmath>
#include <string>

namespace grouplogic {

const char* to_string(HaarKind kind) {
  switch (kind) {
    case HaarKind::Counting: return "counting";
    case HaarKind::Normalized: return "normalized";
    case HaarKind::Custom: return "custom";
  }
  return "?";
}

namespace {

void check_lambda(const FiniteGroupoid& g, const std::vector<double>& lambda) {
  if (lambda.size() != g.object_count())
    throw_measure("lambda has " + std::to_string(lambda.size()) +
                  " entries for " + std::to_string(g.object_count()) +
                  " objects");
  bool any_positive = false;
  for (double v : lambda) {
    if (!(v >= 0.0))
      throw_measure("lambda must be non-negative everywhere");
    if (v > 0.0) any_positive = true;
  }
  if (!any_positive) throw_measure("lambda must be positive somewhere");
}

}  // namespace

std::vector<double> uniform_lambda(const FiniteGroupoid& g) {
  return std::vector<double>(g.object_count(),
                             1.0 / static_cast<double>(g.object_count()));
}

std::optional<HaarViolation> check_left_invariance(
    const FiniteGroupoid& g, std::span<const double> fiber_weight) {
  for (const auto& [alpha, gamma, comp] : g.composable_triples())
    if (fiber_weight[comp] != fiber_weight[gamma])
      return HaarViolation{alpha, gamma};
  return std::nullopt;
}

bool weight_factors_through_source(const FiniteGroupoid& g,
                                   std::span<const double> fiber_weight) {
  for (Idx j = 0; j < g.object_count(); ++j) {
    auto fiber = g.source_fiber(j);
    for (Idx m : fiber)
      if (fiber_weight[m] != fiber_weight[fiber.front()]) return false;
  }
  return true;
}

void MeasuredGroupoid::derive() {
  const FiniteGroupoid& g = *g_;
  const std::size_t n = g.morphism_count();

  mu_.resize(n);
  for (Idx m = 0; m < n; ++m) mu_[m] = lambda_[g.target(m)] * fiber_weight_[m];

  delta_.assign(n, 1.0);
  delta_defined_.assign(n, true);
  delta_degenerate_.assign(n, false);
  delta_total_ = true;
  for (Idx m = 0; m < n; ++m) {
    Idx inv = g.inverse(m);
    if (mu_[m] > 0.0 && mu_[inv] > 0.0) {
      delta_[m] = mu_[m] / mu_[inv];
    } else if (inv == m) {
      delta_[m] = 1.0;  // self-inverse: δ = 1 regardless of measure
    } else if (mu_[m] == 0.0 && mu_[inv] == 0.0) {
      delta_[m] = 1.0;  // null either way; conventional value, flagged
      delta_defined_[m] = false;
      delta_total_ = false;
    } else {
      delta_[m] = 1.0;
      delta_defined_[m] = false;
      delta_degenerate_[m] = true;
      delta_total_ = false;
    }
  }

  Lambda_.resize(n);
  for (Idx m = 0; m < n; ++m) {
    Idx inv = g.inverse(m);
    // Computed symmetrically so that Λ(γ) and Λ(γ⁻¹) are the same double.
    Lambda_[m] = std::sqrt(mu_[std::min(m, inv)] * mu_[std::max(m, inv)]);
  }

  orbit_lambda_.assign(g.orbit_count(), 0.0);
  orbit_isotropy_.assign(g.orbit_count(), 1);
  for (Idx o = 0; o < g.orbit_count(); ++o) {
    for (Idx j : g.orbit_members(o)) orbit_lambda_[o] += lambda_[j];
    Idx rep = g.orbit_members(o).front();
    std::size_t iso = 0;
    for (Idx m : g.target_fiber(rep))
      if (g.source(m) == rep) ++iso;
    orbit_isotropy_[o] = iso == 0 ? 1 : iso;
  }

  if (kind_ == HaarKind::Normalized) {
    bridge_certified_ = true;
    for (Idx o = 0; o < g.orbit_count(); ++o) {
      bool any_zero = false, any_pos = false;
      for (Idx j : g.orbit_members(o)) {
        if (lambda_[j] > 0.0) any_pos = true;
        else any_zero = true;
      }
      if (any_zero && any_pos) bridge_certified_ = false;
    }
  }
}

MeasuredGroupoid counting_haar(GroupoidPtr g, std::vector<double> lambda) {
  check_lambda(*g, lambda);
  MeasuredGroupoid mg;
  mg.g_ = std::move(g);
  mg.kind_ = HaarKind::Counting;
  mg.lambda_ = std::move(lambda);
  mg.fiber_weight_.assign(mg.g_->morphism_count(), 1.0);
  mg.derive();
  return mg;
}

MeasuredGroupoid normalized_haar(GroupoidPtr g, std::vector<double> lambda) {
  check_lambda(*g, lambda);
  MeasuredGroupoid mg;
  mg.g_ = std::move(g);
  mg.kind_ = HaarKind::Normalized;
  mg.lambda_ = std::move(lambda);
  const FiniteGroupoid& gg = *mg.g_;

  std::vector<double> orbit_mass(gg.orbit_count(), 0.0);
  std::vector<bool> orbit_all_positive(gg.orbit_count(), true);
  std::vector<double> orbit_iso(gg.orbit_count(), 1.0);
  for (Idx o = 0; o < gg.orbit_count(); ++o) {
    for (Idx j : gg.orbit_members(o)) {
      orbit_mass[o] += mg.lambda_[j];
      if (!(mg.lambda_[j] > 0.0)) orbit_all_positive[o] = false;
    }
    Idx rep = gg.orbit_members(o).front();
    std::size_t iso = 0;
    for (Idx m : gg.target_fiber(rep))
      if (gg.source(m) == rep) ++iso;
    orbit_iso[o] = static_cast<double>(iso == 0 ? 1 : iso);
  }

  mg.fiber_weight_.resize(gg.morphism_count());
  for (Idx m = 0; m < gg.morphism_count(); ++m) {
    Idx o = gg.orbit_of(gg.source(m));
    if (orbit_all_positive[o])
      mg.fiber_weight_[m] =
          mg.lambda_[gg.source(m)] / (orbit_mass[o] * orbit_iso[o]);
    else
      mg.fiber_weight_[m] =
          1.0 / static_cast<double>(gg.target_fiber(gg.target(m)).size());
  }
  mg.derive();
  return mg;
}

MeasuredGroupoid custom_haar(GroupoidPtr g, std::vector<double> lambda,
                             std::vector<double> fiber_weight) {
  check_lambda(*g, lambda);
  if (fiber_weight.size() != g->morphism_count())
    throw_measure("fiber weights must cover every morphism");
  for (double w : fiber_weight)
    if (!(w > 0.0)) throw_measure("fiber weights must be strictly positive");
  if (auto bad = check_left_invariance(*g, fiber_weight))
    throw_measure("left invariance violated: weight(" +
                  g->morphism_label(bad->alpha) + "∘" +
                  g->morphism_label(bad->gamma) + ") != weight(" +
                  g->morphism_label(bad->gamma) + ")");
  MeasuredGroupoid mg;
  mg.g_ = std::move(g);
  mg.kind_ = HaarKind::Custom;
  mg.lambda_ = std::move(lambda);
  mg.fiber_weight_ = std::move(fiber_weight);
  mg.derive();
  return mg;
}

std::span<const double> modular_function(const MeasuredGroupoid& mg) {
  return mg.modular();
}

std::span<const double> invariant_representative(const MeasuredGroupoid& mg) {
  return mg.invariant();
}

}  // namespace grouplogic
