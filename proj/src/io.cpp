#include "grouplogic/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace grouplogic {

namespace {

Idx morphism_by_label(const FiniteGroupoid& g, const std::string& label) {
  auto m = g.morphism_index(label);
  if (!m) throw_input("unknown morphism id: " + label);
  return *m;
}

Idx object_by_label(const FiniteGroupoid& g, const std::string& label) {
  auto j = g.object_index(label);
  if (!j) throw_input("unknown object label: " + label);
  return *j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw_input("bad number: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw_input("bad number: " + s);
  }
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw_input("bad integer: " + s);
  return v;
}

}  // namespace

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json j;
  j["objects"] = Json::array();
  for (Idx o = 0; o < g.object_count(); ++o)
    j["objects"].push_back(g.object_label(o));
  j["morphisms"] = Json::array();
  for (Idx m = 0; m < g.morphism_count(); ++m)
    j["morphisms"].push_back({{"id", g.morphism_label(m)},
                              {"src", g.object_label(g.source(m))},
                              {"tgt", g.object_label(g.target(m))}});
  j["compose"] = Json::array();
  for (const auto& [a, b, c] : g.composable_triples())
    j["compose"].push_back({g.morphism_label(a), g.morphism_label(b),
                            g.morphism_label(c)});
  j["inverse"] = Json::array();
  for (Idx m = 0; m < g.morphism_count(); ++m)
    j["inverse"].push_back({g.morphism_label(m),
                            g.morphism_label(g.inverse(m))});
  return j;
}

GroupoidPtr groupoid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("morphisms"))
    throw_input("groupoid file needs 'objects' and 'morphisms'");
  GroupoidBuilder b;
  std::vector<std::string> obj_labels;
  for (const auto& o : j.at("objects")) {
    if (!o.is_string()) throw_input("object labels must be strings");
    obj_labels.push_back(o.get<std::string>());
    b.add_object(obj_labels.back());
  }
  auto obj_idx = [&](const std::string& s) -> Idx {
    for (Idx i = 0; i < obj_labels.size(); ++i)
      if (obj_labels[i] == s) return i;
    throw_input("morphism references unknown object: " + s);
  };
  std::vector<std::string> mor_labels;
  auto mor_idx = [&](const std::string& s) -> Idx {
    for (Idx i = 0; i < mor_labels.size(); ++i)
      if (mor_labels[i] == s) return i;
    throw_input("unknown morphism id: " + s);
  };
  for (const auto& m : j.at("morphisms")) {
    if (!m.is_object() || !m.contains("id") || !m.contains("src") ||
        !m.contains("tgt"))
      throw_input("each morphism needs id/src/tgt");
    mor_labels.push_back(m.at("id").get<std::string>());
    b.add_morphism(mor_labels.back(), obj_idx(m.at("src").get<std::string>()),
                   obj_idx(m.at("tgt").get<std::string>()));
  }
  if (j.contains("compose"))
    for (const auto& t : j.at("compose")) {
      if (!t.is_array() || t.size() != 3)
        throw_input("compose entries are triples [a, b, a∘b]");
      b.set_compose(mor_idx(t[0].get<std::string>()),
                    mor_idx(t[1].get<std::string>()),
                    mor_idx(t[2].get<std::string>()));
    }
  if (j.contains("inverse"))
    for (const auto& p : j.at("inverse")) {
      if (!p.is_array() || p.size() != 2)
        throw_input("inverse entries are pairs [a, a⁻¹]");
      b.set_inverse(mor_idx(p[0].get<std::string>()),
                    mor_idx(p[1].get<std::string>()));
    }
  return std::move(b).build();
}

Json measure_to_json(const MeasuredGroupoid& mg) {
  const FiniteGroupoid& g = mg.groupoid();
  Json j;
  j["lambda"] = Json::object();
  for (Idx o = 0; o < g.object_count(); ++o)
    j["lambda"][g.object_label(o)] = mg.lambda(o);
  if (mg.haar_kind() == HaarKind::Counting)
    j["haar"] = "counting";
  else if (mg.haar_kind() == HaarKind::Normalized)
    j["haar"] = "normalized";
  else {
    j["haar"] = Json::object();
    for (Idx m = 0; m < g.morphism_count(); ++m)
      j["haar"][g.morphism_label(m)] = mg.fiber_weight(m);
  }
  return j;
}

MeasuredGroupoid measure_from_json(GroupoidPtr g, const Json& j) {
  if (!j.is_object() || !j.contains("lambda"))
    throw_input("measure file needs a 'lambda' map");
  std::vector<double> lambda(g->object_count(), 0.0);
  for (const auto& [key, value] : j.at("lambda").items())
    lambda[object_by_label(*g, key)] = value.get<double>();
  Json haar = j.contains("haar") ? j.at("haar") : Json("normalized");
  if (haar.is_string()) {
    std::string kind = haar.get<std::string>();
    if (kind == "counting") return counting_haar(std::move(g), std::move(lambda));
    if (kind == "normalized")
      return normalized_haar(std::move(g), std::move(lambda));
    throw_input("unknown haar kind: " + kind);
  }
  std::vector<double> weights(g->morphism_count(), 0.0);
  for (const auto& [key, value] : haar.items())
    weights[morphism_by_label(*g, key)] = value.get<double>();
  return custom_haar(std::move(g), std::move(lambda), std::move(weights));
}

Json phase_to_json(const PhaseAction& p) {
  Json j;
  j["S"] = Json::object();
  for (Idx m = 0; m < p.g->morphism_count(); ++m)
    j["S"][p.g->morphism_label(m)] = p.values[m];
  return j;
}

PhaseAction phase_from_json(GroupoidPtr g, const Json& j) {
  if (j.contains("potential")) {
    std::vector<double> phi(g->object_count(), 0.0);
    for (const auto& [key, value] : j.at("potential").items())
      phi[object_by_label(*g, key)] = value.get<double>();
    return phase_from_potential(std::move(g), phi);
  }
  if (j.contains("S")) {
    std::vector<double> s(g->morphism_count(), 0.0);
    for (const auto& [key, value] : j.at("S").items())
      s[morphism_by_label(*g, key)] = value.get<double>();
    return make_phase(std::move(g), std::move(s));
  }
  throw_input("phase file needs 'S' or 'potential'");
}

Json function_to_json(const GroupoidFunction& f) {
  Json j;
  j["coefficients"] = Json::object();
  for (Idx m = 0; m < f.g->morphism_count(); ++m)
    j["coefficients"][f.g->morphism_label(m)] =
        Json::array({f.coeff[m].real(), f.coeff[m].imag()});
  return j;
}

GroupoidFunction function_from_json(GroupoidPtr g, const Json& j) {
  if (!j.contains("coefficients"))
    throw_input("function file needs a 'coefficients' map");
  GroupoidFunction f = zero_function(std::move(g));
  for (const auto& [key, value] : j.at("coefficients").items()) {
    if (!value.is_array() || value.size() != 2)
      throw_input("coefficients are [re, im] pairs");
    f.coeff[morphism_by_label(*f.g, key)] =
        Complex{value[0].get<double>(), value[1].get<double>()};
  }
  return f;
}

Json lattice_to_json(const FiniteLattice& l) {
  Json j;
  j["elements"] = Json::array();
  for (LIdx x = 0; x < l.size(); ++x) j["elements"].push_back(l.label(x));
  j["leq"] = Json::array();
  for (LIdx a = 0; a < l.size(); ++a)
    for (LIdx b = 0; b < l.size(); ++b)
      if (a != b && l.leq(a, b)) j["leq"].push_back({l.label(a), l.label(b)});
  j["complement"] = Json::array();
  for (LIdx a = 0; a < l.size(); ++a)
    j["complement"].push_back({l.label(a), l.label(l.complement(a))});
  return j;
}

FiniteLattice lattice_from_json(const Json& j) {
  if (!j.contains("elements")) throw_input("lattice file needs 'elements'");
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  auto idx = [&](const std::string& s) -> LIdx {
    for (LIdx i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    throw_input("unknown lattice element: " + s);
  };
  std::vector<std::pair<LIdx, LIdx>> leq, comp;
  if (j.contains("leq"))
    for (const auto& p : j.at("leq"))
      leq.push_back({idx(p[0].get<std::string>()), idx(p[1].get<std::string>())});
  if (j.contains("complement"))
    for (const auto& p : j.at("complement"))
      comp.push_back({idx(p[0].get<std::string>()), idx(p[1].get<std::string>())});
  return FiniteLattice::from_order(std::move(labels), leq, comp);
}

// ---------------------------------------------------------------------------
// Builtins and CLI helpers
// ---------------------------------------------------------------------------

namespace {

GroupoidPtr parse_single_builtin(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "pair")
    return pair_groupoid(parse_size(parts[1]));
  if (parts.size() == 2 && parts[0] == "units")
    return unit_groupoid(parse_size(parts[1]));
  if (parts.size() == 3 && parts[0] == "group" && parts[1] == "z")
    return cyclic_group_groupoid(parse_size(parts[2]));
  throw_input("unknown builtin groupoid: " + spec +
              " (expected pair:n, units:n or group:z:k)");
}

bool looks_like_builtin(const std::string& spec) {
  return spec.rfind("pair:", 0) == 0 || spec.rfind("units:", 0) == 0 ||
         spec.rfind("group:", 0) == 0;
}

}  // namespace

bool is_builtin_spec(const std::string& spec) {
  auto parts = split(spec, '+');
  if (parts.empty()) return false;
  for (const auto& p : parts)
    if (!looks_like_builtin(p)) return false;
  return true;
}

GroupoidPtr parse_builtin(const std::string& spec) {
  auto parts = split(spec, '+');
  if (parts.empty()) throw_input("empty groupoid spec");
  GroupoidPtr g = parse_single_builtin(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = disjoint_union(*g, *parse_single_builtin(parts[i]));
  return g;
}

GroupoidPtr load_groupoid(const std::string& source) {
  if (is_builtin_spec(source)) return parse_builtin(source);
  return groupoid_from_json(load_json_file(source));
}

ObjectSet parse_object_subset(GroupoidPtr g, const std::string& csv) {
  ObjectSet s = make_object_set(g);
  if (csv.empty()) return s;
  for (const auto& label : split(csv, ','))
    s.bits.set(object_by_label(*g, label));
  return s;
}

std::vector<double> parse_lambda(const FiniteGroupoid& g,
                                 const std::string& spec) {
  if (spec.empty() || spec == "uniform") return uniform_lambda(g);
  auto parts = split(spec, ',');
  if (parts.size() != g.object_count())
    throw_input("lambda needs " + std::to_string(g.object_count()) +
                " comma-separated values");
  std::vector<double> lambda;
  for (const auto& p : parts) lambda.push_back(parse_double(p));
  return lambda;
}

MeasuredGroupoid parse_measure(GroupoidPtr g, const std::string& haar_spec,
                               const std::string& lambda_spec) {
  if (haar_spec.empty() || haar_spec == "normalized")
    return normalized_haar(g, parse_lambda(*g, lambda_spec));
  if (haar_spec == "counting")
    return counting_haar(g, parse_lambda(*g, lambda_spec));
  // Measure file; an explicit --lambda wins over the file's lambda map.
  Json j = load_json_file(haar_spec);
  if (!lambda_spec.empty()) {
    std::vector<double> lambda = parse_lambda(*g, lambda_spec);
    j["lambda"] = Json::object();
    for (Idx o = 0; o < g->object_count(); ++o)
      j["lambda"][g->object_label(o)] = lambda[o];
  }
  return measure_from_json(std::move(g), j);
}

PhaseAction parse_phase(GroupoidPtr g, const std::string& spec) {
  if (spec.rfind("potential:", 0) == 0) {
    auto parts = split(spec.substr(10), ',');
    if (parts.size() != g->object_count())
      throw_input("potential needs " + std::to_string(g->object_count()) +
                  " comma-separated values");
    std::vector<double> phi;
    for (const auto& p : parts) phi.push_back(parse_double(p));
    return phase_from_potential(std::move(g), phi);
  }
  return phase_from_json(g, load_json_file(spec));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_input("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw_input("parse error in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw_input("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace grouplogic
