#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/approximation.hpp"
#include "fdes/automaton.hpp"
#include "fdes/error.hpp"
#include "fdes/fdl.hpp"
#include "fdes/language.hpp"
#include "fdes/oracle.hpp"
#include "fdes/predicates.hpp"
#include "fdes/projection.hpp"
#include "fdes/synthesis.hpp"

namespace fdes {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInvalid = 2;

namespace cli {

using Json = nlohmann::ordered_json;

/// `path` or `path#Name`, selecting one named entity from a file.
struct FileRef {
  std::string path;
  std::string name;

  static FileRef parse(const std::string& text) {
    const auto hash = text.rfind('#');
    if (hash == std::string::npos) return {text, {}};
    return {text.substr(0, hash), text.substr(hash + 1)};
  }
};

inline FdlDocument load(const std::string& ref, const AlphabetPtr& context, bool repair = false) {
  ParseOptions options;
  options.context = context;
  options.repair_languages = repair;
  return parse_fdl_file(FileRef::parse(ref).path, options);
}

template <typename Map>
const typename Map::mapped_type& pick(const Map& items, const std::string& ref, const std::string& kind) {
  const FileRef f = FileRef::parse(ref);
  if (!f.name.empty()) {
    const auto it = items.find(f.name);
    if (it == items.end()) throw Error(ErrorCode::SyntaxError, f.path + ": no " + kind + " named '" + f.name + "'");
    return it->second;
  }
  if (items.size() != 1) {
    throw Error(ErrorCode::SyntaxError, f.path + ": expected exactly one " + kind + " but found " +
                                            std::to_string(items.size()) + "; select one with " + f.path + "#<name>");
  }
  return items.begin()->second;
}

/// Plant file: must provide its own alphabet (or carry one from `alphabet_ref`).
struct Plant {
  AlphabetPtr alphabet;
  FuzzyLanguage language;
};

inline Plant load_plant(const std::string& ref) {
  FdlDocument doc = load(ref, nullptr);
  if (!doc.alphabet) throw Error(ErrorCode::InvalidAlphabet, FileRef::parse(ref).path + ": plant file has no [alphabet]");
  return {doc.alphabet, pick(doc.languages, ref, "language")};
}

inline FuzzyLanguage load_language(const std::string& ref, const AlphabetPtr& context, bool repair = false) {
  return pick(load(ref, context, repair).languages, ref, "language");
}

/// The plant alphabet extended with site specs from `sites_ref`, or the
/// plant alphabet itself when it already has them.
inline AlphabetPtr sited_alphabet(const AlphabetPtr& plant, const std::string& sites_ref) {
  if (sites_ref.empty()) {
    if (!plant->sites()) throw Error(ErrorCode::InvalidAlphabet, "no site specs: add a [sites] section or pass --sites");
    return plant;
  }
  FdlDocument doc = load(sites_ref, plant);
  if (!doc.alphabet || !doc.alphabet->sites()) {
    throw Error(ErrorCode::InvalidAlphabet, FileRef::parse(sites_ref).path + ": no [sites] section");
  }
  if (doc.alphabet->events() != plant->events()) {
    throw Error(ErrorCode::AlphabetMismatch, FileRef::parse(sites_ref).path + ": events differ from the plant's");
  }
  return doc.alphabet;
}

inline Json language_json(const FuzzyLanguage& l) {
  Json out = Json::array();
  for (const auto& [s, g] : l.entries()) out.push_back({{"string", s.to_string()}, {"grade", g.to_string()}});
  return out;
}

inline Json strings_json(const std::vector<EventString>& strings) {
  Json out = Json::array();
  for (const auto& s : strings) out.push_back(s.to_string());
  return out;
}

inline Json events_json(const EventSet& set) {
  Json out = Json::array();
  for (const auto& e : set) out.push_back(e.name());
  return out;
}

inline Json witness_json(const Witness& w) {
  Json out;
  out["kind"] = std::string(to_string(w.kind));
  out["strings"] = strings_json(w.strings);
  out["event"] = w.event ? Json(w.event->name()) : Json(nullptr);
  out["lhs"] = w.lhs.to_string();
  out["rhs"] = w.rhs.to_string();
  out["class"] = strings_json(w.projection_class);
  return out;
}

inline Json report_json(const CheckReport& r) {
  Json out = Json::array();
  for (const auto& w : r.witnesses) out.push_back(witness_json(w));
  return out;
}

inline Json supervisor_json(const FuzzySupervisor& s) {
  Json rows = Json::array();
  for (const auto& [t, row] : s.table()) {
    Json enable = Json::object();
    for (const auto& [e, g] : row) enable[e.name()] = g.to_string();
    rows.push_back({{"obs", t.to_string()}, {"enable", enable}});
  }
  return {{"controllable", events_json(s.controllable())},
          {"observable", events_json(s.projection().observable())},
          {"rows", rows}};
}

inline std::string language_document(const std::string& name, const FuzzyLanguage& l) {
  return emit_alphabet(l.alphabet()) + "\n" + emit_language(name, l);
}

inline std::string supervisor_document(const std::vector<std::pair<std::string, const FuzzySupervisor*>>& sups) {
  std::string out = emit_alphabet(sups.front().second->projection().alphabet());
  for (const auto& [name, s] : sups) out += "\n" + emit_supervisor(name, *s);
  return out;
}

/// Shared output flags and sinks for one command run.
struct Output {
  std::ostream& out;
  bool json = false;
  std::string out_path;

  // FDL artifact: to --out when given, else to stdout unless JSON is on.
  void artifact(const std::string& text) const {
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::SyntaxError, out_path + ": cannot write file");
      file << text;
    } else if (!json) {
      out << text;
    }
  }

  void report(const Json& j) const {
    if (json) out << j.dump(2) << "\n";
  }

  void line(const std::string& text) const {
    if (!json) out << text << "\n";
  }
};

inline void print_witnesses(const Output& o, const CheckReport& r) {
  for (const auto& w : r.witnesses) o.line("  " + describe(w));
}

inline int run_validate(const Output& o, const std::vector<std::string>& files, const std::string& alphabet_ref) {
  AlphabetPtr context;
  if (!alphabet_ref.empty()) context = load(alphabet_ref, nullptr).alphabet;
  Json results = Json::array();
  for (const auto& f : files) {
    const FdlDocument doc = load(f, context);
    o.line(FileRef::parse(f).path + ": ok (" + std::to_string(doc.languages.size()) + " languages, " +
           std::to_string(doc.automata.size()) + " automata, " + std::to_string(doc.supervisors.size()) +
           " supervisors)");
    results.push_back({{"file", FileRef::parse(f).path},
                       {"languages", doc.languages.size()},
                       {"automata", doc.automata.size()},
                       {"supervisors", doc.supervisors.size()}});
  }
  o.report({{"command", "validate"}, {"valid", true}, {"files", results}});
  return kExitHolds;
}

inline int run_check(const Output& o, const std::string& property, const std::string& plant_ref,
                     const std::string& spec_ref, const std::string& sites_ref) {
  const Plant plant = load_plant(plant_ref);
  const FuzzyLanguage k = load_language(spec_ref, plant.alphabet);
  const Projection pr = Projection::central(plant.alphabet);
  CheckReport report;
  if (property == "controllable") {
    report = is_controllable(k, plant.language, *plant.alphabet);
  } else if (property == "observable") {
    report = is_observable(k, plant.language, pr);
  } else if (property == "strongly-observable") {
    report = is_strongly_observable(k, plant.language, pr);
  } else if (property == "normal") {
    report = is_normal(k, plant.language, pr);
  } else {
    const auto sites = site_controls(sited_alphabet(plant.alphabet, sites_ref));
    report = is_coobservable(k, plant.language, sites[0], sites[1]);
  }
  o.line(property + ": " + (report.holds() ? "holds" : "fails"));
  print_witnesses(o, report);
  o.report({{"command", "check"}, {"property", property}, {"holds", report.holds()}, {"witnesses", report_json(report)}});
  return report.holds() ? kExitHolds : kExitFails;
}

inline int run_synthesize(const Output& o, const std::string& mode, const std::string& plant_ref,
                          const std::string& spec_ref, const std::string& sites_ref, bool force) {
  const Plant plant = load_plant(plant_ref);
  const FuzzyLanguage k = load_language(spec_ref, plant.alphabet);
  try {
    if (mode == "central") {
      const FuzzySupervisor s = synthesize_central(k, plant.language, Projection::central(plant.alphabet), force);
      o.artifact(supervisor_document({{"S", &s}}));
      o.report({{"command", "synthesize"}, {"mode", mode}, {"supervisors", {{"S", supervisor_json(s)}}}});
    } else {
      const auto [s1, s2] = synthesize_decentralized(k, plant.language, sited_alphabet(plant.alphabet, sites_ref), force);
      o.artifact(supervisor_document({{"S1", &s1}, {"S2", &s2}}));
      o.report({{"command", "synthesize"},
                {"mode", mode},
                {"supervisors", {{"S1", supervisor_json(s1)}, {"S2", supervisor_json(s2)}}}});
    }
  } catch (const ConditionViolated& e) {
    o.line("synthesis refused: specification is not " + e.property());
    print_witnesses(o, e.report());
    o.report({{"command", "synthesize"},
              {"mode", mode},
              {"refused", true},
              {"property", e.property()},
              {"witnesses", report_json(e.report())}});
    return kExitFails;
  }
  return kExitHolds;
}

inline int run_closed_loop(const Output& o, const std::string& plant_ref, const std::vector<std::string>& sup_refs,
                           const std::string& spec_ref) {
  const Plant plant = load_plant(plant_ref);
  std::vector<FuzzySupervisor> sups;
  for (const auto& ref : sup_refs) {
    const FdlDocument doc = load(ref, plant.alphabet);
    const FileRef f = FileRef::parse(ref);
    if (!f.name.empty()) {
      sups.push_back(pick(doc.supervisors, ref, "supervisor"));
    } else {
      for (const auto& [name, s] : doc.supervisors) sups.push_back(s);
    }
  }
  if (sups.empty() || sups.size() > 2) {
    throw Error(ErrorCode::InvalidSupervisor, "closed-loop takes one or two supervisors, got " + std::to_string(sups.size()));
  }
  const FuzzyLanguage result = sups.size() == 1 ? closed_loop_central(plant.language, sups[0])
                                                : closed_loop_decentralized(plant.language, sups[0], sups[1]);
  std::string text = language_document("CL", result);
  Json j{{"command", "closed-loop"}, {"supervisors", sups.size()}, {"language", language_json(result)}};
  int code = kExitHolds;
  if (!spec_ref.empty()) {
    const bool equal = verify_achieves(load_language(spec_ref, plant.alphabet), result);
    text += std::string("# equals spec: ") + (equal ? "yes" : "no") + "\n";
    j["equals_spec"] = equal;
    if (!equal) code = kExitFails;
  }
  o.artifact(text);
  o.report(j);
  return code;
}

inline int run_extremal(const Output& o, const std::string& command, const std::string& plant_ref,
                        const std::string& spec_ref) {
  const Plant plant = load_plant(plant_ref);
  const FuzzyLanguage k = load_language(spec_ref, plant.alphabet);
  const Projection pr = Projection::central(plant.alphabet);
  const bool infimal = command == "infimal-co";
  const FuzzyLanguage result = infimal ? infimal_co(k, plant.language, pr) : supremal_cn(k, plant.language, pr);
  o.artifact(language_document(infimal ? "K_inf" : "K_sup", result));
  o.report({{"command", command}, {"language", language_json(result)}});
  return kExitHolds;
}

inline int run_scp(const Output& o, const std::string& min_ref, const std::string& max_ref,
                   const std::string& plant_ref) {
  const Plant plant = load_plant(plant_ref);
  const FuzzyLanguage la = load_language(min_ref, plant.alphabet);
  const FuzzyLanguage ll = load_language(max_ref, plant.alphabet);
  const ScpOutcome r = scp(la, ll, plant.language, Projection::central(plant.alphabet));
  if (!r.solved()) {
    o.line("no supervisor: the infimal controllable and observable superlanguage of the minimal language exceeds the legal one");
    for (const auto& [s, g] : r.infimal.entries()) {
      if (ll.grade(s) < g) o.line("  " + s.to_string() + " " + g.to_string() + " > " + ll.grade(s).to_string());
    }
    o.report({{"command", "scp"}, {"solved", false}, {"infimal", language_json(r.infimal)}});
    return kExitFails;
  }
  o.artifact(supervisor_document({{"S", &*r.supervisor}}) + "\n" + emit_language("K_inf", r.infimal));
  o.report({{"command", "scp"},
            {"solved", true},
            {"infimal", language_json(r.infimal)},
            {"supervisor", supervisor_json(*r.supervisor)}});
  return kExitHolds;
}

inline int run_lang(const Output& o, const std::string& op, const std::vector<std::string>& inputs, int site) {
  const bool binary = op == "union" || op == "intersection" || op == "concat" || op == "contains" || op == "equal";
  if (inputs.size() != (binary ? 2u : 1u)) {
    throw Error(ErrorCode::SyntaxError, "lang --op " + op + " takes " + (binary ? "two" : "one") + " --in files");
  }
  const bool repair = op == "repair";
  const FdlDocument first = load(inputs[0], nullptr, repair);
  if (!first.alphabet) throw Error(ErrorCode::InvalidAlphabet, FileRef::parse(inputs[0]).path + ": no [alphabet]");
  const FuzzyLanguage a = pick(first.languages, inputs[0], "language");
  if (op == "contains" || op == "equal") {
    const FuzzyLanguage b = load_language(inputs[1], first.alphabet);
    const bool holds = op == "contains" ? is_sublanguage(a, b) : a == b;
    o.line(op + ": " + (holds ? "holds" : "fails"));
    o.report({{"command", "lang"}, {"op", op}, {"holds", holds}});
    return holds ? kExitHolds : kExitFails;
  }
  std::optional<FuzzyLanguage> result;
  if (op == "union") result = language_union(a, load_language(inputs[1], first.alphabet));
  if (op == "intersection") result = language_intersection(a, load_language(inputs[1], first.alphabet));
  if (op == "concat") result = concatenation(a, load_language(inputs[1], first.alphabet));
  if (op == "repair") result = a;
  if (op == "project") {
    const Projection pr = site == 0 ? Projection::central(first.alphabet)
                                    : Projection::site(first.alphabet, static_cast<std::size_t>(site - 1));
    result = project_language(pr, a);
  }
  o.artifact(language_document("result", *result));
  o.report({{"command", "lang"}, {"op", op}, {"language", language_json(*result)}});
  return kExitHolds;
}

inline int run_gen(const Output& o, const std::string& automaton_ref, const std::string& language_ref,
                   std::size_t horizon) {
  if (automaton_ref.empty() == language_ref.empty()) {
    throw Error(ErrorCode::SyntaxError, "gen takes exactly one of --automaton or --language");
  }
  if (!automaton_ref.empty()) {
    const FdlDocument doc = load(automaton_ref, nullptr);
    const FuzzyLanguage l = pick(doc.automata, automaton_ref, "automaton").generated_language(horizon);
    o.artifact(language_document("L", l));
    o.report({{"command", "gen"}, {"horizon", horizon}, {"language", language_json(l)}});
    return kExitHolds;
  }
  const FdlDocument doc = load(language_ref, nullptr);
  const FuzzyAutomaton g = automaton_from_language(pick(doc.languages, language_ref, "language"));
  o.artifact(emit_alphabet(g.alphabet()) + "\n" + emit_automaton("G", g));
  Json transitions = Json::array();
  for (const auto& t : g.transitions()) {
    transitions.push_back({{"from", t.from}, {"event", t.event.name()}, {"to", t.to}, {"grade", t.grade.to_string()}});
  }
  o.report({{"command", "gen"}, {"states", g.states()}, {"initial", g.initial()}, {"transitions", transitions}});
  return kExitHolds;
}

inline int run_oracle(const Output& o, const std::string& op, const std::string& mode, const std::string& plant_ref,
                      const std::string& spec_ref, const std::string& sites_ref, std::uint64_t budget) {
  const Plant plant = load_plant(plant_ref);
  const FuzzyLanguage k = load_language(spec_ref, plant.alphabet);
  const Projection pr = Projection::central(plant.alphabet);
  if (op == "supervisor-exists") {
    const bool exists = mode == "central"
                            ? brute_supervisor_exists(k, plant.language, pr, budget)
                            : brute_decentralized_supervisor_exists(k, plant.language,
                                                                    sited_alphabet(plant.alphabet, sites_ref), budget);
    o.line(std::string("supervisor exists: ") + (exists ? "yes" : "no"));
    o.report({{"command", "oracle"}, {"op", op}, {"mode", mode}, {"exists", exists}});
    return exists ? kExitHolds : kExitFails;
  }
  const bool infimal = op == "infimal-co";
  const FuzzyLanguage result =
      infimal ? brute_infimal_co(k, plant.language, pr, budget) : brute_supremal_cn(k, plant.language, pr, budget);
  o.artifact(language_document(infimal ? "K_inf" : "K_sup", result));
  o.report({{"command", "oracle"}, {"op", op}, {"language", language_json(result)}});
  return kExitHolds;
}

}  // namespace cli

/// Entry point of the `fdes` tool. `args` excludes the program name.
/// Returns 0 on success or when a property holds, 1 when it fails or no
/// solution exists, 2 on usage or input errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supervisory control of fuzzy discrete-event systems", "fdes"};
  app.require_subcommand(1);

  bool json = false;
  std::string out_path;
  const auto add_output = [&](CLI::App* sub, bool artifacts) {
    sub->add_flag("--json", json, "Machine-readable report on standard output");
    if (artifacts) sub->add_option("--out", out_path, "Write the FDL artifact to this file");
  };
  const std::vector<std::string> properties{"controllable", "observable", "strongly-observable", "normal", "coobservable"};

  std::vector<std::string> files;
  std::string alphabet_ref;
  auto* validate = app.add_subcommand("validate", "Parse and validate FDL files");
  validate->add_option("files", files, "FDL files")->required();
  validate->add_option("--alphabet", alphabet_ref, "File whose [alphabet] applies to files without one");
  add_output(validate, false);

  std::string property, plant, spec, sites;
  auto* check = app.add_subcommand("check", "Check a property of a specification against a plant");
  check->add_option("--property", property, "Property to check")->required()->check(CLI::IsMember(properties));
  check->add_option("--plant", plant, "Plant language file (path or path#Name)")->required();
  check->add_option("--spec", spec, "Specification language file")->required();
  check->add_option("--sites", sites, "File with a [sites] section (coobservable)");
  add_output(check, false);

  std::string mode = "central";
  bool force = false;
  auto* synthesize = app.add_subcommand("synthesize", "Synthesize a supervisor achieving the specification");
  synthesize->add_option("--mode", mode, "central or decentralized")->check(CLI::IsMember({"central", "decentralized"}));
  synthesize->add_option("--plant", plant, "Plant language file")->required();
  synthesize->add_option("--spec", spec, "Specification language file")->required();
  synthesize->add_option("--sites", sites, "File with a [sites] section (decentralized)");
  synthesize->add_flag("--force", force, "Skip the controllability and observability checks");
  add_output(synthesize, true);

  std::vector<std::string> supervisor_refs;
  auto* closed = app.add_subcommand("closed-loop", "Closed-loop language of a plant under one or two supervisors");
  closed->add_option("--plant", plant, "Plant language file")->required();
  closed->add_option("--supervisor", supervisor_refs, "Supervisor file(s)")->required();
  closed->add_option("--spec", spec, "Compare the result with this language");
  add_output(closed, true);

  auto* infimal = app.add_subcommand("infimal-co", "Least controllable and observable superlanguage");
  auto* supremal = app.add_subcommand("supremal-cn", "Greatest controllable and normal sublanguage");
  for (auto* sub : {infimal, supremal}) {
    sub->add_option("--plant", plant, "Plant language file")->required();
    sub->add_option("--spec", spec, "Specification language file")->required();
    add_output(sub, true);
  }

  std::string min_ref, max_ref;
  auto* scp_cmd = app.add_subcommand("scp", "Find a supervisor whose closed loop lies between two languages");
  scp_cmd->add_option("--min", min_ref, "Minimal acceptable language")->required();
  scp_cmd->add_option("--max", max_ref, "Maximal legal language")->required();
  scp_cmd->add_option("--plant", plant, "Plant language file")->required();
  add_output(scp_cmd, true);

  std::string op;
  std::vector<std::string> inputs;
  int site = 0;
  auto* lang = app.add_subcommand("lang", "Language algebra");
  lang->add_option("--op", op, "Operation")
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "concat", "project", "repair", "contains", "equal"}));
  lang->add_option("--in", inputs, "Input language file(s)")->required();
  lang->add_option("--site", site, "Project onto site 1 or 2 instead of the global observable set")
      ->check(CLI::Range(0, 2));
  add_output(lang, true);

  std::string automaton_ref, language_ref;
  std::size_t horizon = 8;
  auto* gen = app.add_subcommand("gen", "Generated language of an automaton, or an automaton for a language");
  gen->add_option("--automaton", automaton_ref, "Automaton file");
  gen->add_option("--language", language_ref, "Language file");
  gen->add_option("--horizon", horizon, "Longest string length to generate")->capture_default_str();
  add_output(gen, true);

  std::uint64_t budget = kDefaultBudget;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->add_option("--op", op, "Operation")
      ->required()
      ->check(CLI::IsMember({"infimal-co", "supremal-cn", "supervisor-exists"}));
  oracle->add_option("--mode", mode, "central or decentralized (supervisor-exists)")
      ->check(CLI::IsMember({"central", "decentralized"}));
  oracle->add_option("--plant", plant, "Plant language file")->required();
  oracle->add_option("--spec", spec, "Specification language file")->required();
  oracle->add_option("--sites", sites, "File with a [sites] section");
  oracle->add_option("--budget", budget, "Maximum number of enumerated candidates")->capture_default_str();
  add_output(oracle, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitInvalid;
  }

  const cli::Output o{out, json, out_path};
  try {
    if (*validate) return cli::run_validate(o, files, alphabet_ref);
    if (*check) return cli::run_check(o, property, plant, spec, sites);
    if (*synthesize) return cli::run_synthesize(o, mode, plant, spec, sites, force);
    if (*closed) return cli::run_closed_loop(o, plant, supervisor_refs, spec);
    if (*infimal) return cli::run_extremal(o, "infimal-co", plant, spec);
    if (*supremal) return cli::run_extremal(o, "supremal-cn", plant, spec);
    if (*scp_cmd) return cli::run_scp(o, min_ref, max_ref, plant);
    if (*lang) return cli::run_lang(o, op, inputs, site);
    if (*gen) return cli::run_gen(o, automaton_ref, language_ref, horizon);
    if (*oracle) return cli::run_oracle(o, op, mode, plant, spec, sites, budget);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << cli::Json{{"error", std::string(to_string(e.code()))}, {"message", e.detail()}}.dump(2) << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace fdes
