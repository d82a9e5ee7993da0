#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/error.hpp"
#include "fdes/grade.hpp"

namespace fdes {

/// Validation failure tied to one string of a language, so that text
/// front-ends can point at the offending line.
class LanguageError : public Error {
 public:
  LanguageError(ErrorCode code, const std::string& message, EventString subject)
      : Error(code, message), subject_(std::move(subject)) {}

  const EventString& subject() const noexcept { return subject_; }

 private:
  EventString subject_;
};

/// Finite-support fuzzy language. Either empty, or grade(eps) = 1 and every
/// extension's grade is bounded by each of its prefixes. Only positive grades
/// are stored, so the key set is the (prefix-closed) support.
class FuzzyLanguage {
 public:
  using Entries = std::map<EventString, Grade>;
  using EntryList = std::vector<std::pair<EventString, Grade>>;

  /// Strict constructor: zero grades are dropped, then P1/P2 are enforced.
  static FuzzyLanguage build(AlphabetPtr alphabet, const EntryList& entries) {
    Entries map;
    for (const auto& [s, g] : entries) {
      alphabet->require_events(s);
      if (!map.emplace(s, g).second) {
        throw LanguageError(ErrorCode::DuplicateString, "'" + s.to_string() + "' is listed twice", s);
      }
    }
    return from_map(std::move(alphabet), std::move(map));
  }

  /// Validates an already-keyed map (zero grades dropped).
  static FuzzyLanguage from_map(AlphabetPtr alphabet, Entries entries) {
    std::erase_if(entries, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [s, g] : entries) alphabet->require_events(s);
    validate(entries);
    return FuzzyLanguage(std::move(alphabet), std::move(entries));
  }

  static FuzzyLanguage empty(AlphabetPtr alphabet) { return FuzzyLanguage(std::move(alphabet), {}); }

  /// {eps:1}: the identity for concatenation.
  static FuzzyLanguage epsilon(AlphabetPtr alphabet) {
    return FuzzyLanguage(std::move(alphabet), Entries{{EventString{}, Grade::one()}});
  }

  Grade grade(const EventString& s) const {
    const auto it = entries_.find(s);
    return it == entries_.end() ? Grade::zero() : it->second;
  }
  Grade operator()(const EventString& s) const { return grade(s); }

  bool contains(const EventString& s) const { return entries_.count(s) != 0; }
  bool is_empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  const Entries& entries() const noexcept { return entries_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  /// Support in shortlex order.
  std::vector<EventString> support() const {
    std::vector<EventString> out;
    out.reserve(entries_.size());
    for (const auto& kv : entries_) out.push_back(kv.first);
    return out;
  }

  std::size_t max_length() const { return entries_.empty() ? 0 : entries_.rbegin()->first.size(); }

  /// Every distinct grade in the support.
  std::set<Grade> grades() const {
    std::set<Grade> out;
    for (const auto& kv : entries_) out.insert(kv.second);
    return out;
  }

  /// Languages compare equal on their membership functions and event sets;
  /// controllability/observability annotations of the alphabet are ignored.
  friend bool operator==(const FuzzyLanguage& a, const FuzzyLanguage& b) {
    return a.alphabet_->events() == b.alphabet_->events() && a.entries_ == b.entries_;
  }

 private:
  FuzzyLanguage(AlphabetPtr alphabet, Entries entries)
      : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {}

  static void validate(const Entries& entries) {
    if (entries.empty()) return;
    const auto eps = entries.find(EventString{});
    if (eps != entries.end() && !eps->second.is_one()) {
      throw LanguageError(ErrorCode::P1Violation, "grade of eps is " + eps->second.to_string() + ", expected 1",
                          EventString{});
    }
    // A missing eps is reported as a P2 failure of the first string that needs it.
    for (const auto& [s, g] : entries) {
      if (s.empty()) continue;
      const EventString parent = s.parent();
      const auto it = entries.find(parent);
      if (it == entries.end()) {
        throw LanguageError(ErrorCode::P2Violation,
                            "'" + s.to_string() + "' has grade " + g.to_string() + " but its prefix '" +
                                parent.to_string() + "' has grade 0",
                            s);
      }
      if (it->second < g) {
        throw LanguageError(ErrorCode::P2Violation,
                            "'" + s.to_string() + "' (" + g.to_string() + ") exceeds its prefix '" +
                                parent.to_string() + "' (" + it->second.to_string() + ")",
                            s);
      }
    }
  }

  AlphabetPtr alphabet_;
  Entries entries_;
};

inline Grade grade_of(const FuzzyLanguage& k, const EventString& s) { return k.grade(s); }

namespace detail {

inline void require_same_events(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  if (a.alphabet().events() != b.alphabet().events()) {
    throw Error(ErrorCode::AlphabetMismatch, "languages are over different event sets {" +
                                                 join_events(a.alphabet().events()) + "} and {" +
                                                 join_events(b.alphabet().events()) + "}");
  }
}

}  // namespace detail

inline FuzzyLanguage language_union(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  detail::require_same_events(a, b);
  FuzzyLanguage::Entries out = a.entries();
  for (const auto& [s, g] : b.entries()) {
    auto [it, inserted] = out.emplace(s, g);
    if (!inserted) it->second = join(it->second, g);
  }
  return FuzzyLanguage::from_map(a.alphabet_ptr(), std::move(out));
}

inline FuzzyLanguage language_intersection(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  detail::require_same_events(a, b);
  FuzzyLanguage::Entries out;
  for (const auto& [s, g] : a.entries()) {
    const Grade other = b.grade(s);
    if (other.positive()) out.emplace(s, meet(g, other));
  }
  return FuzzyLanguage::from_map(a.alphabet_ptr(), std::move(out));
}

/// (AB)(w) = max over splits w = uv of A(u) min B(v).
inline FuzzyLanguage concatenation(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  detail::require_same_events(a, b);
  std::set<EventString> candidates;
  for (const auto& [u, gu] : a.entries()) {
    for (const auto& [v, gv] : b.entries()) candidates.insert(u.concat(v));
  }
  FuzzyLanguage::Entries out;
  for (const auto& w : candidates) {
    Grade best;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      best = join(best, meet(a.grade(w.prefix(i)), b.grade(w.suffix_from(i))));
    }
    if (best.positive()) out.emplace(w, best);
  }
  return FuzzyLanguage::from_map(a.alphabet_ptr(), std::move(out));
}

/// Pointwise A <= B. Only supp(A) needs checking.
inline bool is_sublanguage(const FuzzyLanguage& a, const FuzzyLanguage& b) {
  detail::require_same_events(a, b);
  for (const auto& [s, g] : a.entries()) {
    if (b.grade(s) < g) return false;
  }
  return true;
}

/// Smallest valid language above the listed entries: every string is raised
/// to the join of its own grade and its listed extensions, missing prefixes
/// are added, and eps is set to 1.
inline FuzzyLanguage prefix_close_repair(AlphabetPtr alphabet, const FuzzyLanguage::EntryList& entries) {
  FuzzyLanguage::Entries raised;
  for (const auto& [s, g] : entries) {
    alphabet->require_events(s);
    if (g.is_zero()) continue;
    for (std::size_t n = 0; n <= s.size(); ++n) {
      auto [it, inserted] = raised.emplace(s.prefix(n), g);
      if (!inserted) it->second = join(it->second, g);
    }
  }
  if (!raised.empty()) raised[EventString{}] = Grade::one();
  return FuzzyLanguage::from_map(std::move(alphabet), std::move(raised));
}

}  // namespace fdes
