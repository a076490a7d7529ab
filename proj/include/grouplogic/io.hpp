#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "grouplogic/algebra.hpp"
#include "grouplogic/lattice.hpp"
#include "grouplogic/measure.hpp"
#include "grouplogic/phase.hpp"

namespace grouplogic {

using Json = nlohmann::ordered_json;

// Structured-text formats. Groupoids: objects (labels), morphisms
// ({id,src,tgt}), compose (triples [a,b,a∘b]), inverse (pairs). Measures:
// lambda (label → number) and haar ("counting" | "normalized" | explicit
// morphism-id → number). Phases: either per-morphism S or an object
// potential. Functions: morphism-id → [re, im].

Json groupoid_to_json(const FiniteGroupoid& g);
GroupoidPtr groupoid_from_json(const Json& j);

Json measure_to_json(const MeasuredGroupoid& mg);
MeasuredGroupoid measure_from_json(GroupoidPtr g, const Json& j);

Json phase_to_json(const PhaseAction& p);
PhaseAction phase_from_json(GroupoidPtr g, const Json& j);

Json function_to_json(const GroupoidFunction& f);
GroupoidFunction function_from_json(GroupoidPtr g, const Json& j);

Json lattice_to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const Json& j);

/// True when the string matches the builtin grammar
/// (`pair:n`, `units:n`, `group:z:k`, optionally joined with '+').
bool is_builtin_spec(const std::string& spec);

/// Builds a builtin groupoid from its spec string.
GroupoidPtr parse_builtin(const std::string& spec);

/// Builtin spec or a path to a groupoid file.
GroupoidPtr load_groupoid(const std::string& source);

/// Comma-separated object labels -> subset ("1,3"). Empty string -> ∅.
ObjectSet parse_object_subset(GroupoidPtr g, const std::string& csv);

/// "uniform" or comma-separated per-object values.
std::vector<double> parse_lambda(const FiniteGroupoid& g,
                                 const std::string& spec);

/// "counting" | "normalized" | path to a measure file (whose lambda entry is
/// ignored in favour of the supplied one when `lambda_override` is set).
MeasuredGroupoid parse_measure(GroupoidPtr g, const std::string& haar_spec,
                               const std::string& lambda_spec);

/// "potential:v1,v2,..." (object order) or a path to a phase file.
PhaseAction parse_phase(GroupoidPtr g, const std::string& spec);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace grouplogic
