#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/error.hpp"
#include "fdes/language.hpp"

namespace fdes {

/// Natural projection P onto an observable subset of an alphabet.
class Projection {
 public:
  Projection(AlphabetPtr alphabet, EventSet observable)
      : alphabet_(std::move(alphabet)), observable_(std::move(observable)) {
    for (const auto& e : observable_) {
      if (!alphabet_->contains(e)) {
        throw Error(ErrorCode::UnknownEvent, "observable event '" + e.name() + "' is not in the alphabet");
      }
    }
  }

  /// P over the alphabet's global observable set E_o.
  static Projection central(AlphabetPtr alphabet) {
    EventSet obs = alphabet->observable();
    return Projection(std::move(alphabet), std::move(obs));
  }

  /// P_i over site i's observable set (index 0 or 1).
  static Projection site(AlphabetPtr alphabet, std::size_t index) {
    if (!alphabet->sites()) throw Error(ErrorCode::InvalidAlphabet, "alphabet has no site specs");
    EventSet obs = (*alphabet->sites()).at(index).observable;
    return Projection(std::move(alphabet), std::move(obs));
  }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const EventSet& observable() const noexcept { return observable_; }
  bool observes(const EventId& e) const { return observable_.count(e) != 0; }

  EventString operator()(const EventString& s) const {
    std::vector<EventId> kept;
    for (const auto& e : s.events()) {
      if (!alphabet_->contains(e)) {
        throw Error(ErrorCode::UnknownEvent, "event '" + e.name() + "' is not in the alphabet");
      }
      if (observes(e)) kept.push_back(e);
    }
    return EventString(std::move(kept));
  }

  /// Alphabet of projected strings: E_o, all observable.
  AlphabetPtr image_alphabet() const {
    EventSet controllable;
    for (const auto& e : observable_) {
      if (alphabet_->is_controllable(e)) controllable.insert(e);
    }
    return make_alphabet(observable_, std::move(controllable), observable_);
  }

 private:
  AlphabetPtr alphabet_;
  EventSet observable_;
};

inline EventString project_string(const Projection& pr, const EventString& s) { return pr(s); }

/// Groups strings by their projection. Keys and members are in shortlex order.
using ProjectionClasses = std::map<EventString, std::vector<EventString>>;

inline ProjectionClasses projection_classes(const Projection& pr, const FuzzyLanguage& k) {
  ProjectionClasses out;
  for (const auto& [s, g] : k.entries()) out[pr(s)].push_back(s);
  return out;
}

/// P(K)(w) = max of K over the preimage of w. The result lives over E_o.
inline FuzzyLanguage project_language(const Projection& pr, const FuzzyLanguage& k) {
  FuzzyLanguage::Entries out;
  for (const auto& [s, g] : k.entries()) {
    auto [it, inserted] = out.emplace(pr(s), g);
    if (!inserted) it->second = join(it->second, g);
  }
  return FuzzyLanguage::from_map(pr.image_alphabet(), std::move(out));
}

/// w -> M(P(w)) min L(w), evaluated on supp(L). The pullback of M alone has
/// infinite support and is never materialized.
inline FuzzyLanguage inverse_project_meet(const Projection& pr, const FuzzyLanguage& m, const FuzzyLanguage& l) {
  FuzzyLanguage::Entries out;
  for (const auto& [s, g] : l.entries()) {
    const Grade v = meet(m.grade(pr(s)), g);
    if (v.positive()) out.emplace(s, v);
  }
  return FuzzyLanguage::from_map(l.alphabet_ptr(), std::move(out));
}

}  // namespace fdes
