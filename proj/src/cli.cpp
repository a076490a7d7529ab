#include "grouplogic/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "grouplogic/gns.hpp"
#include "grouplogic/io.hpp"

namespace grouplogic {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(Complex v) {
  if (v.imag() == 0.0) return fmt(v.real());
  std::string s = fmt(v.real());
  s += v.imag() < 0 ? "-" : "+";
  s += fmt(std::abs(v.imag()));
  s += "i";
  return s;
}

Json json_complex(Complex v) { return Json::array({v.real(), v.imag()}); }

std::string subset_label_from_mask(const GroupoidPtr& g, std::uint64_t mask) {
  return object_set_from_mask(g, mask).label();
}

struct LoadedRun {
  GroupoidPtr g;
  std::string groupoid_text;
};

LoadedRun load_run(const RunConfig& cfg) {
  LoadedRun run;
  run.g = load_groupoid(cfg.groupoid_source);
  run.groupoid_text = cfg.groupoid_source;
  return run;
}

std::vector<ObjectSet> atom_family(const GroupoidPtr& g) {
  std::vector<ObjectSet> atoms;
  for (Idx j = 0; j < g->object_count(); ++j)
    atoms.push_back(make_object_set(g, {j}));
  return atoms;
}

std::vector<ObjectSet> parse_family(const GroupoidPtr& g,
                                    const std::string& spec) {
  std::vector<ObjectSet> family;
  std::string cur;
  std::istringstream in(spec);
  while (std::getline(in, cur, ';'))
    family.push_back(parse_object_subset(g, cur));
  return family;
}

void print_matrix(std::ostream& out, const std::vector<ObjectSet>& family,
                  const std::vector<std::vector<Complex>>& m) {
  std::size_t w = 10;
  for (const auto& s : family) w = std::max(w, s.label().size() + 2);
  out << std::string(w, ' ');
  for (const auto& s : family) {
    std::string l = s.label();
    out << l << std::string(l.size() < w ? w - l.size() : 1, ' ');
  }
  out << "\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::string l = family[i].label();
    out << l << std::string(l.size() < w ? w - l.size() : 1, ' ');
    for (std::size_t j = 0; j < family.size(); ++j) {
      std::string v = fmt(m[i][j]);
      out << v << std::string(v.size() < w ? w - v.size() : 1, ' ');
    }
    out << "\n";
  }
}

Json matrix_to_json(const std::vector<std::vector<Complex>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (Complex v : row) r.push_back(json_complex(v));
    rows.push_back(r);
  }
  return rows;
}

Json report_to_json(const DecoherenceReport& rep) {
  Json j;
  j["family"] = Json::array();
  for (const auto& s : rep.family) j["family"].push_back(s.label());
  j["D"] = matrix_to_json(rep.d);
  j["mu2"] = rep.mu2;
  j["interference"] = matrix_to_json(rep.interference);
  j["max_third_order"] = rep.max_third_order;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  LoadedRun run = load_run(cfg);
  ValidationReport rep = validate(*run.g);

  Json j;
  j["command"] = "validate";
  j["groupoid"] = run.groupoid_text;
  j["objects"] = run.g->object_count();
  j["morphisms"] = run.g->morphism_count();
  j["violations"] = Json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back(
        {{"kind", to_string(v.kind)}, {"detail", v.detail}});

  if (cfg.format == "text") {
    out << "groupoid " << run.groupoid_text << ": " << run.g->object_count()
        << " objects, " << run.g->morphism_count() << " morphisms\n";
    if (rep.ok()) {
      out << "axioms: ok\n";
    } else {
      out << "axioms: " << rep.violations.size() << " violation(s)\n";
      for (const auto& v : rep.violations)
        out << "  [" << to_string(v.kind) << "] " << v.detail << "\n";
    }
  }
  if (!rep.ok()) {
    if (cfg.format == "json") out << j.dump(2) << "\n";
    return 2;
  }

  // Optional measure and phase validation.
  if (!cfg.lambda_spec.empty() || !cfg.haar_spec.empty()) {
    MeasuredGroupoid mg =
        parse_measure(run.g, cfg.haar_spec, cfg.lambda_spec);  // throws on bad
    j["haar"] = to_string(mg.haar_kind());
    j["left_invariant"] = true;
    if (cfg.format == "text")
      out << "haar (" << to_string(mg.haar_kind()) << "): ok\n";
  }
  if (!cfg.phase_spec.empty()) {
    parse_phase(run.g, cfg.phase_spec);  // throws with the violated law
    j["phase"] = "ok";
    if (cfg.format == "text") out << "phase: ok\n";
  }
  if (cfg.format == "json") out << j.dump(2) << "\n";
  return 0;
}

void require_valid(const LoadedRun& run) {
  ValidationReport axioms = validate(*run.g);
  if (!axioms.ok())
    throw_input("groupoid fails " + std::to_string(axioms.violations.size()) +
                " axiom check(s); run validate for the list");
}

int cmd_decohere(const RunConfig& cfg, std::ostream& out) {
  LoadedRun run = load_run(cfg);
  require_valid(run);
  MeasuredGroupoid mg = parse_measure(run.g, cfg.haar_spec, cfg.lambda_spec);
  PhaseAction phase = cfg.phase_spec.empty()
                          ? zero_phase(run.g)
                          : parse_phase(run.g, cfg.phase_spec);
  const PhaseAction* phase_ptr = cfg.phase_spec.empty() ? nullptr : &phase;
  ConvolutionKind kind = cfg.convolution == "literal" ? ConvolutionKind::Literal
                                                      : ConvolutionKind::Haar;

  Json j;
  j["command"] = "decohere";
  j["groupoid"] = run.groupoid_text;
  j["haar"] = to_string(mg.haar_kind());
  j["lambda"] = std::vector<double>(mg.lambda().begin(), mg.lambda().end());
  j["phase"] = !cfg.phase_spec.empty();
  j["bridge_certified"] = mg.bridge_certified();

  if (cfg.subset_a.empty() != cfg.subset_b.empty())
    throw_input("decohere needs both --a and --b (or neither)");
  if (!cfg.subset_a.empty() && !cfg.subset_b.empty()) {
    ObjectSet a = parse_object_subset(run.g, cfg.subset_a);
    ObjectSet b = parse_object_subset(run.g, cfg.subset_b);
    Complex d = decoherence(mg, b, a, phase_ptr);
    bool cond = conditioned(*run.g, a, b);
    j["a"] = a.label();
    j["b"] = b.label();
    j["D"] = json_complex(d);
    j["conditioned"] = cond;
    if (cfg.bridge) {
      Complex w = bridge_decoherence(mg, b, a, kind);
      j["bridge"] = json_complex(w);
      j["bridge_kind"] = cfg.convolution;
    }
    if (cfg.format == "text") {
      out << "D(b=" << b.label() << ", a=" << a.label() << ") = " << fmt(d)
          << "\n";
      out << "conditioned: " << (cond ? "yes" : "no") << "\n";
      if (cfg.bridge) {
        Complex w = bridge_decoherence(mg, b, a, kind);
        out << "bridge (" << cfg.convolution << " convolution, "
            << (mg.bridge_certified() && kind == ConvolutionKind::Haar
                    ? "certified"
                    : "uncertified")
            << "): " << fmt(w) << "\n";
      }
    } else {
      out << j.dump(2) << "\n";
    }
    return 0;
  }

  DecoherenceReport atoms =
      build_decoherence_report(mg, atom_family(run.g), phase_ptr);
  j["atoms"] = report_to_json(atoms);
  if (cfg.format == "text") {
    out << "groupoid " << run.groupoid_text << ", haar "
        << to_string(mg.haar_kind()) << (phase_ptr ? ", with phase" : "")
        << "\n";
    out << "D over atoms (rows b, cols a):\n";
    print_matrix(out, atoms.family, atoms.d);
    out << "mu2 over atoms:";
    for (std::size_t i = 0; i < atoms.family.size(); ++i)
      out << " " << atoms.family[i].label() << "=" << fmt(atoms.mu2[i]);
    out << "\ninterference over disjoint atom pairs:\n";
    print_matrix(out, atoms.family, atoms.interference);
    out << "max |I3| over disjoint atom triples: "
        << fmt(atoms.max_third_order) << "\n";
  }
  if (!cfg.family.empty()) {
    DecoherenceReport fam =
        build_decoherence_report(mg, parse_family(run.g, cfg.family),
                                 phase_ptr);
    j["family"] = report_to_json(fam);
    if (cfg.format == "text") {
      out << "D over listed family:\n";
      print_matrix(out, fam.family, fam.d);
      out << "mu2 over family:";
      for (std::size_t i = 0; i < fam.family.size(); ++i)
        out << " " << fam.family[i].label() << "=" << fmt(fam.mu2[i]);
      out << "\n";
    }
  }
  if (cfg.bridge) {
    std::vector<std::vector<Complex>> bridge_m(
        atoms.family.size(), std::vector<Complex>(atoms.family.size()));
    for (std::size_t i = 0; i < atoms.family.size(); ++i)
      for (std::size_t k = 0; k < atoms.family.size(); ++k)
        bridge_m[i][k] =
            bridge_decoherence(mg, atoms.family[i], atoms.family[k], kind);
    j["bridge"] = matrix_to_json(bridge_m);
    j["bridge_kind"] = cfg.convolution;
    if (cfg.format == "text") {
      out << "bridge over atoms (" << cfg.convolution << " convolution, "
          << (mg.bridge_certified() && kind == ConvolutionKind::Haar
                  ? "certified"
                  : "uncertified")
          << "):\n";
      print_matrix(out, atoms.family, bridge_m);
    }
  }
  if (cfg.format == "json") out << j.dump(2) << "\n";
  return 0;
}

int cmd_sorkin_audit(const RunConfig& cfg, std::ostream& out) {
  LoadedRun run = load_run(cfg);
  require_valid(run);
  MeasuredGroupoid mg = parse_measure(run.g, cfg.haar_spec, cfg.lambda_spec);
  PhaseAction phase = cfg.phase_spec.empty()
                          ? zero_phase(run.g)
                          : parse_phase(run.g, cfg.phase_spec);
  const PhaseAction* phase_ptr = cfg.phase_spec.empty() ? nullptr : &phase;

  Json j;
  j["command"] = "sorkin-audit";
  j["groupoid"] = run.groupoid_text;
  j["tolerance"] = cfg.tolerance;

  if (!cfg.subset_a.empty() || !cfg.subset_b.empty() ||
      !cfg.subset_c.empty()) {
    ObjectSet a = parse_object_subset(run.g, cfg.subset_a);
    ObjectSet b = parse_object_subset(run.g, cfg.subset_b);
    ObjectSet c = parse_object_subset(run.g, cfg.subset_c);
    double r = sorkin_third_order(mg, a, b, c, phase_ptr);
    j["residual"] = r;
    bool pass = std::abs(r) <= cfg.tolerance;
    j["pass"] = pass;
    if (cfg.format == "text")
      out << "I3(" << a.label() << ", " << b.label() << ", " << c.label()
          << ") = " << fmt(r) << (pass ? "  PASS" : "  FAIL") << "\n";
    else
      out << j.dump(2) << "\n";
    return pass ? 0 : 1;
  }

  SorkinAudit audit = sorkin_audit(mg, phase_ptr, cfg.jobs);
  bool pass = audit.max_residual <= cfg.tolerance;
  j["max_residual"] = audit.max_residual;
  j["triples"] = audit.triples;
  j["worst"] = {subset_label_from_mask(run.g, audit.worst_a),
                subset_label_from_mask(run.g, audit.worst_b),
                subset_label_from_mask(run.g, audit.worst_c)};
  j["pass"] = pass;
  if (cfg.format == "text") {
    out << "sorkin audit of " << run.groupoid_text << ": max |I3| = "
        << fmt(audit.max_residual) << " over " << audit.triples
        << " disjoint triples\n";
    out << "worst triple: a=" << subset_label_from_mask(run.g, audit.worst_a)
        << " b=" << subset_label_from_mask(run.g, audit.worst_b)
        << " c=" << subset_label_from_mask(run.g, audit.worst_c) << "\n";
    out << "tolerance " << fmt(cfg.tolerance) << ": "
        << (pass ? "PASS" : "FAIL") << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_gns_report(const RunConfig& cfg, std::ostream& out) {
  LoadedRun run = load_run(cfg);
  require_valid(run);
  MeasuredGroupoid mg = parse_measure(run.g, cfg.haar_spec, cfg.lambda_spec);
  GnsReport rep = gns_report(mg, cfg.tolerance, 1e-10, cfg.jobs);

  Json j;
  j["command"] = "gns-report";
  j["groupoid"] = run.groupoid_text;
  j["haar"] = to_string(mg.haar_kind());
  j["certified"] = rep.certified;
  j["dimension"] = rep.dimension;
  j["min_eigenvalue"] = rep.min_eigenvalue;
  j["max_eigenvalue"] = rep.max_eigenvalue;
  j["atoms"] = Json::array();
  for (const auto& atom : rep.atoms)
    j["atoms"].push_back({{"object", atom.label},
                          {"mu2", atom.mu2},
                          {"in_ideal", atom.in_ideal},
                          {"near_threshold", atom.near_threshold}});
  j["excluded_morphisms"] = rep.excluded_morphisms;

  if (cfg.format == "text") {
    out << "gns report for " << run.groupoid_text << " (haar "
        << to_string(mg.haar_kind()) << ", "
        << (rep.certified ? "certified" : "uncertified") << ")\n";
    out << "gns dimension: " << rep.dimension << "\n";
    out << "gram eigenvalues: min " << fmt(rep.min_eigenvalue) << ", max "
        << fmt(rep.max_eigenvalue) << "\n";
    out << "atomic null sets:";
    bool any = false;
    for (const auto& atom : rep.atoms)
      if (atom.in_ideal) {
        out << " {" << atom.label << "}";
        any = true;
      }
    if (!any) out << " none";
    out << "\n";
    for (const auto& atom : rep.atoms)
      if (atom.near_threshold)
        out << "  near-threshold atom {" << atom.label
            << "}: mu2 = " << fmt(atom.mu2) << "\n";
    if (!rep.excluded_morphisms.empty()) {
      out << "excluded (degenerate modular) morphisms:";
      for (const auto& m : rep.excluded_morphisms) out << " " << m;
      out << "\n";
    }
  } else {
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_relation_report(const RunConfig& cfg, std::ostream& out) {
  LoadedRun run = load_run(cfg);
  require_valid(run);
  RelationOptions opts;
  opts.allow_sampling = true;
  opts.jobs = cfg.jobs;
  RelationReport rep = relation_report(run.g, opts);

  Json j;
  j["command"] = "relation-report";
  j["groupoid"] = run.groupoid_text;
  j["reflexive_on_nonempty"] = rep.reflexive_on_nonempty;
  j["symmetric"] = rep.symmetric;
  j["transitive"] = rep.transitive;
  j["status"] = rep.sampled ? "sampled" : "exhaustive";
  j["pairs_checked"] = rep.pairs_checked;
  if (!rep.transitive && !rep.sampled)
    j["witness"] = {subset_label_from_mask(run.g, rep.witness_a),
                    subset_label_from_mask(run.g, rep.witness_b),
                    subset_label_from_mask(run.g, rep.witness_c)};

  if (cfg.format == "text") {
    out << "conditioning relation on P(Ω) for " << run.groupoid_text << " ("
        << (rep.sampled ? "sampled" : "exhaustive") << ", "
        << rep.pairs_checked << " pairs)\n";
    out << "reflexive on non-empty: "
        << (rep.reflexive_on_nonempty ? "yes" : "no") << "\n";
    out << "symmetric: " << (rep.symmetric ? "yes" : "no") << "\n";
    out << "transitive: " << (rep.transitive ? "yes" : "no") << "\n";
    if (!rep.transitive && !rep.sampled)
      out << "witness: a=" << subset_label_from_mask(run.g, rep.witness_a)
          << " b=" << subset_label_from_mask(run.g, rep.witness_b)
          << " c=" << subset_label_from_mask(run.g, rep.witness_c) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite measured groupoids: conditioning, grade-2 measures, "
               "convolution algebra and GNS reports"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("source", cfg.groupoid_source,
                    "builtin (pair:n, units:n, group:z:k, '+'-joined) or file");
    sub->add_option("--groupoid", cfg.groupoid_source,
                    "same as the positional argument")
        ->excludes("source");
    sub->add_option("--lambda", cfg.lambda_spec,
                    "object measure: 'uniform' or comma-separated values");
    sub->add_option("--haar", cfg.haar_spec,
                    "'normalized' (default), 'counting', or a measure file");
    sub->add_option("--phase", cfg.phase_spec,
                    "'potential:v1,v2,...' or a phase file");
    sub->add_option("--tolerance", cfg.tolerance, "audit tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all)");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check groupoid / haar / phase laws");
  add_common(validate_cmd);

  CLI::App* decohere_cmd = app.add_subcommand(
      "decohere", "decoherence functional tables and grade-2 measures");
  add_common(decohere_cmd);
  decohere_cmd->add_option("--a", cfg.subset_a, "subset of objects (labels)");
  decohere_cmd->add_option("--b", cfg.subset_b, "subset of objects (labels)");
  decohere_cmd->add_option("--family", cfg.family,
                           "';'-separated extra subsets for the table");
  decohere_cmd->add_flag("--bridge", cfg.bridge,
                         "also evaluate the state-side route");
  decohere_cmd
      ->add_option("--convolution", cfg.convolution,
                   "haar (certified) or literal")
      ->check(CLI::IsMember({"haar", "literal"}));

  CLI::App* sorkin_cmd = app.add_subcommand(
      "sorkin-audit", "max third-order interference residual");
  add_common(sorkin_cmd);
  sorkin_cmd->add_option("--a", cfg.subset_a, "explicit triple: subset a");
  sorkin_cmd->add_option("--b", cfg.subset_b, "explicit triple: subset b");
  sorkin_cmd->add_option("--c", cfg.subset_c, "explicit triple: subset c");

  CLI::App* gns_cmd = app.add_subcommand(
      "gns-report", "gram spectrum, GNS dimension, atomic null sets");
  add_common(gns_cmd);

  CLI::App* rel_cmd = app.add_subcommand(
      "relation-report", "reflexivity/symmetry/transitivity of conditioning");
  add_common(rel_cmd);

  std::vector<const char*> argv;
  argv.push_back("grouplogic");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (cfg.groupoid_source.empty()) {
    err << "a groupoid (positional or --groupoid) is required\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      cfg.command = "validate";
      return cmd_validate(cfg, out);
    }
    if (decohere_cmd->parsed()) {
      cfg.command = "decohere";
      return cmd_decohere(cfg, out);
    }
    if (sorkin_cmd->parsed()) {
      cfg.command = "sorkin-audit";
      return cmd_sorkin_audit(cfg, out);
    }
    if (gns_cmd->parsed()) {
      cfg.command = "gns-report";
      return cmd_gns_report(cfg, out);
    }
    if (rel_cmd->parsed()) {
      cfg.command = "relation-report";
      return cmd_relation_report(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace grouplogic
