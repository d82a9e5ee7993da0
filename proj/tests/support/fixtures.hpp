#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdes/fdes.hpp"

namespace fdes::testing {

inline EventString str(const std::string& text) { return parse_event_string(text); }
inline Grade gr(const std::string& text) { return parse_grade(text); }
inline EventId ev(const std::string& name) { return EventId(name); }

inline FuzzyLanguage lang(const AlphabetPtr& alphabet, const std::vector<std::pair<std::string, std::string>>& entries) {
  FuzzyLanguage::EntryList list;
  for (const auto& [s, g] : entries) list.emplace_back(str(s), gr(g));
  return FuzzyLanguage::build(alphabet, list);
}

// Four-event toy plant: c unobservable, d uncontrollable.
inline AlphabetPtr toy_alphabet() {
  return make_alphabet(event_set({"a", "b", "c", "d"}), event_set({"a", "b", "c"}), event_set({"a", "b", "d"}));
}

inline FuzzyLanguage toy_plant(const AlphabetPtr& a = toy_alphabet()) {
  return lang(a, {{"eps", "1"}, {"a", "0.9"}, {"a.b", "0.8"}, {"a.d", "0.8"}, {"a.c", "0.6"}, {"a.c.b", "0.4"},
                  {"a.c.d", "0.6"}});
}

inline FuzzyLanguage toy_spec(const AlphabetPtr& a = toy_alphabet()) {
  return lang(a, {{"eps", "1"}, {"a", "0.7"}, {"a.c", "0.4"}, {"a.d", "0.7"}, {"a.c.d", "0.4"}});
}

// Observable but not strongly observable (as a spec for itself).
inline AlphabetPtr strong_alphabet() { return make_alphabet(event_set({"a", "b"}), event_set({"b"}), event_set({"b"})); }

inline FuzzyLanguage strong_plant(const AlphabetPtr& a = strong_alphabet()) {
  return lang(a, {{"eps", "1"}, {"a", "0.8"}, {"b", "0.9"}, {"a.b", "0.7"}});
}

// Union of two strongly observable languages that is not observable.
inline AlphabetPtr union_alphabet() {
  return make_alphabet(event_set({"a", "b"}), event_set({"a", "b"}), event_set({"b"}));
}

inline FuzzyLanguage union_plant(const AlphabetPtr& a = union_alphabet()) {
  return lang(a, {{"eps", "1"}, {"a", "0.9"}, {"b", "0.8"}, {"a.b", "0.7"}});
}

inline FuzzyLanguage union_k1(const AlphabetPtr& a = union_alphabet()) { return lang(a, {{"eps", "1"}, {"a", "0.8"}}); }
inline FuzzyLanguage union_k2(const AlphabetPtr& a = union_alphabet()) { return lang(a, {{"eps", "1"}, {"b", "0.7"}}); }

// Two-site treatment plan.
inline AlphabetPtr medical_alphabet() {
  const SitePair sites{SiteSpec{event_set({"a1", "a2"}), event_set({"a1", "a2", "b1", "b3"})},
                       SiteSpec{event_set({"a1", "a2"}), event_set({"a1", "a2", "b2", "b3"})}};
  return make_alphabet(event_set({"a1", "a2", "b1", "b2", "b3"}), event_set({"a1", "a2"}),
                       event_set({"a1", "a2", "b1", "b2", "b3"}), sites);
}

inline FuzzyLanguage medical_spec(const AlphabetPtr& a = medical_alphabet()) {
  return lang(a, {{"eps", "1"},
                  {"a1", "0.9"},
                  {"a1.a2", "0.8"},
                  {"a1.b1", "0.2"},
                  {"a1.b2", "0.3"},
                  {"a1.a2.b1", "0.2"},
                  {"a1.a2.b2", "0.3"},
                  {"a1.a2.b3", "0.3"},
                  {"a1.a2.b3.a1", "0.2"},
                  {"a1.a2.b3.b1", "0.2"},
                  {"a1.a2.b3.b2", "0.3"},
                  {"a1.a2.b3.a1.b1", "0.2"},
                  {"a1.a2.b3.a1.b2", "0.2"},
                  {"a1.a2.b3.a1.b3", "0.2"},
                  {"a1.a2.b3.a1.b3.b1", "0.2"},
                  {"a1.a2.b3.a1.b3.b2", "0.2"}});
}

/// Directory of the checked-in sample files.
inline std::string samples_dir() { return FDES_SAMPLES_DIR; }

}  // namespace fdes::testing
