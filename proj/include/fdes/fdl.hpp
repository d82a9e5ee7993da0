#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/automaton.hpp"
#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/language.hpp"
#include "fdes/projection.hpp"
#include "fdes/synthesis.hpp"

// FDL: the line-oriented text format for alphabets, site specs, languages,
// automata and supervisors. See docs/fdl.md for the grammar.

namespace fdes {

struct FdlDocument {
  /// Null when the text has no [alphabet] section and no context was given.
  AlphabetPtr alphabet;
  std::map<std::string, FuzzyLanguage> languages;
  std::map<std::string, FuzzyAutomaton> automata;
  std::map<std::string, FuzzySupervisor> supervisors;
};

struct ParseOptions {
  /// Alphabet used when the text has no [alphabet] section of its own.
  AlphabetPtr context;
  /// Complete each language to its smallest valid superlanguage instead of
  /// rejecting P1/P2 failures.
  bool repair_languages = false;
  /// Prefix for error locations.
  std::string source_name = "<input>";
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line;
  std::vector<Line> body;
};

class Located {
 public:
  explicit Located(std::string source) : source_(std::move(source)) {}

  std::string where(std::size_t line, std::size_t column) const {
    return source_ + ":" + std::to_string(line) + ":" + std::to_string(column);
  }

  [[noreturn]] void fail(ErrorCode code, std::size_t line, std::size_t column, const std::string& message) const {
    throw Error(code, where(line, column) + ": " + message);
  }

  [[noreturn]] void rethrow(const Error& e, std::size_t line, std::size_t column) const {
    fail(e.code(), line, column, e.detail());
  }

 private:
  std::string source_;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') break;
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '#') ++i;
    out.push_back({std::string(text.substr(start, i - start)), start + 1});
  }
  return out;
}

inline std::vector<Section> split_sections(std::string_view text, const Located& loc) {
  std::vector<Section> sections;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front().text.front() == '[') {
      std::string header;
      for (const auto& t : tokens) header += (header.empty() ? "" : " ") + t.text;
      if (header.back() != ']') loc.fail(ErrorCode::SyntaxError, number, tokens.front().column, "unterminated section header");
      header = header.substr(1, header.size() - 2);
      std::vector<Token> parts = tokenize(header);
      if (parts.empty() || parts.size() > 2) {
        loc.fail(ErrorCode::SyntaxError, number, tokens.front().column, "expected [kind] or [kind name]");
      }
      Section s{parts[0].text, parts.size() == 2 ? parts[1].text : std::string(), number, {}};
      const bool named = s.kind == "language" || s.kind == "automaton" || s.kind == "supervisor";
      const bool unnamed = s.kind == "alphabet" || s.kind == "sites";
      if (!named && !unnamed) {
        loc.fail(ErrorCode::SyntaxError, number, tokens.front().column, "unknown section kind '" + s.kind + "'");
      }
      if (named && s.name.empty()) {
        loc.fail(ErrorCode::SyntaxError, number, tokens.front().column, "section [" + s.kind + "] needs a name");
      }
      if (unnamed && !s.name.empty()) {
        loc.fail(ErrorCode::SyntaxError, number, tokens.front().column, "section [" + s.kind + "] takes no name");
      }
      sections.push_back(std::move(s));
    } else {
      if (sections.empty()) loc.fail(ErrorCode::SyntaxError, number, tokens.front().column, "content before any section");
      sections.back().body.push_back({number, std::move(tokens)});
    }
    if (end == text.size()) break;
  }
  return sections;
}

inline EventSet event_list(const Line& line, std::size_t from, const Located& loc) {
  EventSet out;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    const auto& t = line.tokens[i];
    if (!EventId::valid(t.text)) loc.fail(ErrorCode::SyntaxError, line.number, t.column, "'" + t.text + "' is not an event name");
    if (!out.emplace(t.text).second) loc.fail(ErrorCode::DuplicateName, line.number, t.column, "event '" + t.text + "' listed twice");
  }
  return out;
}

inline void require_arity(const Line& line, std::size_t n, const std::string& form, const Located& loc) {
  if (line.tokens.size() != n) {
    const std::size_t col = line.tokens.size() > n ? line.tokens[n].column : line.tokens.back().column;
    loc.fail(ErrorCode::SyntaxError, line.number, col, "expected '" + form + "'");
  }
}

inline Grade grade_at(const Token& t, std::size_t line, const Located& loc) {
  try {
    return parse_grade(t.text);
  } catch (const Error& e) {
    loc.rethrow(e, line, t.column);
  }
}

inline EventString string_at(const Token& t, std::size_t line, const Alphabet& alphabet, const Located& loc) {
  try {
    EventString s = parse_event_string(t.text);
    alphabet.require_events(s);
    return s;
  } catch (const Error& e) {
    loc.rethrow(e, line, t.column);
  }
}

inline EventId event_at(const Token& t, std::size_t line, const Alphabet& alphabet, const Located& loc) {
  if (!EventId::valid(t.text)) loc.fail(ErrorCode::SyntaxError, line, t.column, "'" + t.text + "' is not an event name");
  EventId e(t.text);
  if (!alphabet.contains(e)) loc.fail(ErrorCode::UnknownEvent, line, t.column, "event '" + t.text + "' is not in the alphabet");
  return e;
}

inline AlphabetPtr parse_alphabet(const Section& s, const Located& loc) {
  std::optional<EventSet> events, controllable, observable;
  for (const auto& line : s.body) {
    const auto& key = line.tokens.front();
    std::optional<EventSet>* slot = key.text == "events"         ? &events
                                    : key.text == "controllable" ? &controllable
                                    : key.text == "observable"   ? &observable
                                                                 : nullptr;
    if (!slot) loc.fail(ErrorCode::SyntaxError, line.number, key.column, "expected events, controllable or observable");
    if (*slot) loc.fail(ErrorCode::DuplicateName, line.number, key.column, "'" + key.text + "' given twice");
    *slot = event_list(line, 1, loc);
  }
  if (!events) loc.fail(ErrorCode::SyntaxError, s.line, 1, "[alphabet] needs an events line");
  try {
    return make_alphabet(*events, controllable.value_or(EventSet{}), observable.value_or(EventSet{}));
  } catch (const Error& e) {
    loc.rethrow(e, s.line, 1);
  }
}

inline SitePair parse_sites(const Section& s, const Located& loc) {
  SitePair sites;
  std::map<std::string, bool> seen;
  for (const auto& line : s.body) {
    const auto& key = line.tokens.front();
    if (key.text != "site1" && key.text != "site2") loc.fail(ErrorCode::SyntaxError, line.number, key.column, "expected site1 or site2");
    if (line.tokens.size() < 2 || (line.tokens[1].text != "controllable" && line.tokens[1].text != "observable")) {
      loc.fail(ErrorCode::SyntaxError, line.number, key.column, "expected '" + key.text + " controllable|observable <events>'");
    }
    const std::string slot = key.text + " " + line.tokens[1].text;
    if (seen[slot]) loc.fail(ErrorCode::DuplicateName, line.number, key.column, "'" + slot + "' given twice");
    seen[slot] = true;
    SiteSpec& site = sites[key.text == "site1" ? 0 : 1];
    (line.tokens[1].text == "controllable" ? site.controllable : site.observable) = event_list(line, 2, loc);
  }
  return sites;
}

inline FuzzyLanguage parse_language(const Section& s, const AlphabetPtr& alphabet, bool repair, const Located& loc) {
  FuzzyLanguage::EntryList entries;
  std::map<EventString, std::size_t> lines;
  for (const auto& line : s.body) {
    require_arity(line, 2, "<string> <grade>", loc);
    EventString str = string_at(line.tokens[0], line.number, *alphabet, loc);
    const Grade g = grade_at(line.tokens[1], line.number, loc);
    if (!lines.emplace(str, line.number).second) {
      loc.fail(ErrorCode::DuplicateString, line.number, 1, "'" + str.to_string() + "' is listed twice");
    }
    entries.emplace_back(std::move(str), g);
  }
  try {
    return repair ? prefix_close_repair(alphabet, entries) : FuzzyLanguage::build(alphabet, entries);
  } catch (const LanguageError& e) {
    const auto it = lines.find(e.subject());
    loc.rethrow(e, it == lines.end() ? s.line : it->second, 1);
  } catch (const Error& e) {
    loc.rethrow(e, s.line, 1);
  }
}

inline FuzzyAutomaton parse_automaton(const Section& s, const AlphabetPtr& alphabet, const Located& loc) {
  std::optional<std::vector<std::string>> states;
  std::optional<std::string> initial;
  std::vector<FuzzyAutomaton::Transition> transitions;
  for (const auto& line : s.body) {
    const auto& key = line.tokens.front();
    if (key.text == "states") {
      if (states) loc.fail(ErrorCode::DuplicateName, line.number, key.column, "'states' given twice");
      states.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i) states->push_back(line.tokens[i].text);
    } else if (key.text == "initial") {
      require_arity(line, 2, "initial <state>", loc);
      if (initial) loc.fail(ErrorCode::DuplicateName, line.number, key.column, "'initial' given twice");
      initial = line.tokens[1].text;
    } else if (key.text == "trans") {
      require_arity(line, 5, "trans <from> <event> <to> <grade>", loc);
      transitions.push_back({line.tokens[1].text, event_at(line.tokens[2], line.number, *alphabet, loc),
                             line.tokens[3].text, grade_at(line.tokens[4], line.number, loc)});
    } else {
      loc.fail(ErrorCode::SyntaxError, line.number, key.column, "expected states, initial or trans");
    }
  }
  if (!states) loc.fail(ErrorCode::SyntaxError, s.line, 1, "[automaton " + s.name + "] needs a states line");
  if (!initial) loc.fail(ErrorCode::SyntaxError, s.line, 1, "[automaton " + s.name + "] needs an initial line");
  try {
    return FuzzyAutomaton(alphabet, *states, *initial, transitions);
  } catch (const Error& e) {
    loc.rethrow(e, s.line, 1);
  }
}

inline FuzzySupervisor parse_supervisor(const Section& s, const AlphabetPtr& alphabet, const Located& loc) {
  std::optional<EventSet> controllable, observable;
  FuzzySupervisor::Table table;
  FuzzySupervisor::Row* row = nullptr;
  for (const auto& line : s.body) {
    const auto& key = line.tokens.front();
    if (key.text == "controllable" || key.text == "observable") {
      auto& slot = key.text == "controllable" ? controllable : observable;
      if (slot) loc.fail(ErrorCode::DuplicateName, line.number, key.column, "'" + key.text + "' given twice");
      if (row) loc.fail(ErrorCode::SyntaxError, line.number, key.column, "'" + key.text + "' must precede the rows");
      slot = event_list(line, 1, loc);
    } else if (key.text == "obs") {
      require_arity(line, 2, "obs <observed-string>", loc);
      const EventString t = string_at(line.tokens[1], line.number, *alphabet, loc);
      auto [it, inserted] = table.emplace(t, FuzzySupervisor::Row{});
      if (!inserted) loc.fail(ErrorCode::DuplicateString, line.number, line.tokens[1].column, "row '" + t.to_string() + "' given twice");
      row = &it->second;
    } else if (key.text == "enable") {
      require_arity(line, 3, "enable <event> <grade>", loc);
      if (!row) loc.fail(ErrorCode::SyntaxError, line.number, key.column, "'enable' before any 'obs' line");
      const EventId e = event_at(line.tokens[1], line.number, *alphabet, loc);
      if (!row->emplace(e, grade_at(line.tokens[2], line.number, loc)).second) {
        loc.fail(ErrorCode::DuplicateName, line.number, line.tokens[1].column, "event '" + e.name() + "' enabled twice in one row");
      }
    } else {
      loc.fail(ErrorCode::SyntaxError, line.number, key.column, "expected controllable, observable, obs or enable");
    }
  }
  try {
    Projection pr(alphabet, observable.value_or(alphabet->observable()));
    return FuzzySupervisor(std::move(pr), controllable.value_or(alphabet->controllable()), table);
  } catch (const Error& e) {
    loc.rethrow(e, s.line, 1);
  }
}

}  // namespace detail

inline FdlDocument parse_fdl(std::string_view text, const ParseOptions& options = {}) {
  const detail::Located loc(options.source_name);
  const std::vector<detail::Section> sections = detail::split_sections(text, loc);

  FdlDocument doc;
  const detail::Section* alphabet_section = nullptr;
  const detail::Section* sites_section = nullptr;
  for (const auto& s : sections) {
    const detail::Section** slot = s.kind == "alphabet" ? &alphabet_section : s.kind == "sites" ? &sites_section : nullptr;
    if (!slot) continue;
    if (*slot) loc.fail(ErrorCode::DuplicateName, s.line, 1, "second [" + s.kind + "] section");
    *slot = &s;
  }
  doc.alphabet = alphabet_section ? detail::parse_alphabet(*alphabet_section, loc) : options.context;
  if (sites_section) {
    if (!doc.alphabet) loc.fail(ErrorCode::InvalidAlphabet, sites_section->line, 1, "[sites] without an alphabet");
    const SitePair sites = detail::parse_sites(*sites_section, loc);
    try {
      doc.alphabet = std::make_shared<const Alphabet>(doc.alphabet->with_sites(sites));
    } catch (const Error& e) {
      loc.rethrow(e, sites_section->line, 1);
    }
  }

  std::map<std::string, std::size_t> names;
  for (const auto& s : sections) {
    if (s.kind == "alphabet" || s.kind == "sites") continue;
    if (!doc.alphabet) loc.fail(ErrorCode::InvalidAlphabet, s.line, 1, "[" + s.kind + " " + s.name + "] without an alphabet");
    if (!names.emplace(s.kind + " " + s.name, s.line).second) {
      loc.fail(ErrorCode::DuplicateName, s.line, 1, "second [" + s.kind + " " + s.name + "] section");
    }
    if (s.kind == "language") {
      doc.languages.emplace(s.name, detail::parse_language(s, doc.alphabet, options.repair_languages, loc));
    } else if (s.kind == "automaton") {
      doc.automata.emplace(s.name, detail::parse_automaton(s, doc.alphabet, loc));
    } else {
      doc.supervisors.emplace(s.name, detail::parse_supervisor(s, doc.alphabet, loc));
    }
  }
  return doc;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline FdlDocument parse_fdl_file(const std::string& path, ParseOptions options = {}) {
  options.source_name = path;
  return parse_fdl(read_text_file(path), options);
}

namespace detail {

inline std::string event_line(const std::string& key, const EventSet& set) {
  std::string out = key;
  for (const auto& e : set) out += " " + e.name();
  return out + "\n";
}

}  // namespace detail

inline std::string emit_alphabet(const Alphabet& alphabet) {
  std::string out = "[alphabet]\n";
  out += detail::event_line("events", alphabet.events());
  out += detail::event_line("controllable", alphabet.controllable());
  out += detail::event_line("observable", alphabet.observable());
  if (alphabet.sites()) {
    out += "\n[sites]\n";
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string tag = "site" + std::to_string(i + 1);
      out += detail::event_line(tag + " controllable", (*alphabet.sites())[i].controllable);
      out += detail::event_line(tag + " observable", (*alphabet.sites())[i].observable);
    }
  }
  return out;
}

inline std::string emit_language(const std::string& name, const FuzzyLanguage& l) {
  std::string out = "[language " + name + "]\n";
  for (const auto& [s, g] : l.entries()) out += s.to_string() + " " + g.to_string() + "\n";
  return out;
}

inline std::string emit_automaton(const std::string& name, const FuzzyAutomaton& g) {
  std::string out = "[automaton " + name + "]\nstates";
  for (const auto& q : g.states()) out += " " + q;
  out += "\ninitial " + g.initial() + "\n";
  for (const auto& t : g.transitions()) {
    out += "trans " + t.from + " " + t.event.name() + " " + t.to + " " + t.grade.to_string() + "\n";
  }
  return out;
}

inline std::string emit_supervisor(const std::string& name, const FuzzySupervisor& s) {
  std::string out = "[supervisor " + name + "]\n";
  out += detail::event_line("controllable", s.controllable());
  out += detail::event_line("observable", s.projection().observable());
  for (const auto& [t, row] : s.table()) {
    out += "obs " + t.to_string() + "\n";
    for (const auto& [e, g] : row) out += "enable " + e.name() + " " + g.to_string() + "\n";
  }
  return out;
}

/// Canonical text: alphabet and sites, then languages, automata and
/// supervisors, each sorted by name, separated by blank lines.
inline std::string emit_fdl(const FdlDocument& doc) {
  std::vector<std::string> blocks;
  if (doc.alphabet) blocks.push_back(emit_alphabet(*doc.alphabet));
  for (const auto& [name, l] : doc.languages) blocks.push_back(emit_language(name, l));
  for (const auto& [name, g] : doc.automata) blocks.push_back(emit_automaton(name, g));
  for (const auto& [name, s] : doc.supervisors) blocks.push_back(emit_supervisor(name, s));
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) out += (i ? "\n" : "") + blocks[i];
  return out;
}

}  // namespace fdes
