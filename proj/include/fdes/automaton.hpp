#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/language.hpp"

namespace fdes {

/// Max-min fuzzy automaton (Q, E, delta, q0). Only positive transition grades
/// are stored.
class FuzzyAutomaton {
 public:
  struct Transition {
    std::string from;
    EventId event;
    std::string to;
    Grade grade;
  };

  FuzzyAutomaton(AlphabetPtr alphabet, std::vector<std::string> states, std::string initial,
                 const std::vector<Transition>& transitions)
      : alphabet_(std::move(alphabet)), states_(std::move(states)), initial_(std::move(initial)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (!index_.emplace(states_[i], i).second) {
        throw Error(ErrorCode::UnknownState, "state '" + states_[i] + "' is declared twice");
      }
    }
    initial_index_ = state_index(initial_);
    adjacency_.resize(states_.size());
    for (const auto& t : transitions) {
      const std::size_t from = state_index(t.from);
      const std::size_t to = state_index(t.to);
      if (!alphabet_->contains(t.event)) {
        throw Error(ErrorCode::UnknownEvent, "transition event '" + t.event.name() + "' is not in the alphabet");
      }
      if (t.grade.is_zero()) continue;
      auto& edges = adjacency_[from][t.event];
      for (const auto& [existing_to, g] : edges) {
        if (existing_to == to) {
          throw Error(ErrorCode::DuplicateName, "transition " + t.from + " " + t.event.name() + " " + t.to +
                                                    " is declared twice");
        }
      }
      edges.emplace_back(to, t.grade);
    }
  }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& initial() const noexcept { return initial_; }

  /// All stored transitions, ordered by (from-state declaration, event, to-state declaration).
  std::vector<Transition> transitions() const {
    std::vector<Transition> out;
    for (std::size_t p = 0; p < states_.size(); ++p) {
      for (const auto& [event, edges] : adjacency_[p]) {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [q, g] : sorted) out.push_back({states_[p], event, states_[q], g});
      }
    }
    return out;
  }

  /// delta(p, a, q) for a single event; 0 when absent.
  Grade transition(const std::string& p, const EventId& a, const std::string& q) const {
    return step_vector(unit(state_index(p)), a)[state_index(q)];
  }

  /// Extended transition delta(p, w, q), by max-min composition along w.
  Grade extended_transition(const std::string& p, const EventString& w, const std::string& q) const {
    const std::size_t from = state_index(p);
    const std::size_t to = state_index(q);
    alphabet_->require_events(w);
    std::vector<Grade> v = unit(from);
    for (const auto& a : w.events()) v = step_vector(v, a);
    return v[to];
  }

  /// Grades of every string of length <= horizon. Expands breadth-first over
  /// per-string state-possibility vectors and prunes all-zero vectors.
  FuzzyLanguage generated_language(std::size_t horizon) const {
    FuzzyLanguage::Entries entries;
    if (states_.empty()) return FuzzyLanguage::empty(alphabet_);
    std::deque<std::pair<EventString, std::vector<Grade>>> frontier;
    frontier.emplace_back(EventString{}, unit(initial_index_));
    entries.emplace(EventString{}, Grade::one());
    while (!frontier.empty()) {
      auto [s, v] = std::move(frontier.front());
      frontier.pop_front();
      if (s.size() >= horizon) continue;
      for (const auto& a : alphabet_->events()) {
        std::vector<Grade> next = step_vector(v, a);
        Grade best;
        for (const auto& g : next) best = join(best, g);
        if (best.is_zero()) continue;
        EventString sa = s.then(a);
        entries.emplace(sa, best);
        frontier.emplace_back(std::move(sa), std::move(next));
      }
    }
    return FuzzyLanguage::from_map(alphabet_, std::move(entries));
  }

 private:
  std::size_t state_index(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::UnknownState, "unknown state '" + name + "'");
    return it->second;
  }

  std::vector<Grade> unit(std::size_t i) const {
    std::vector<Grade> v(states_.size());
    v[i] = Grade::one();
    return v;
  }

  std::vector<Grade> step_vector(const std::vector<Grade>& v, const EventId& a) const {
    std::vector<Grade> next(states_.size());
    for (std::size_t r = 0; r < states_.size(); ++r) {
      if (v[r].is_zero()) continue;
      const auto it = adjacency_[r].find(a);
      if (it == adjacency_[r].end()) continue;
      for (const auto& [q, g] : it->second) next[q] = join(next[q], meet(v[r], g));
    }
    return next;
  }

  AlphabetPtr alphabet_;
  std::vector<std::string> states_;
  std::string initial_;
  std::size_t initial_index_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::map<EventId, std::vector<std::pair<std::size_t, Grade>>>> adjacency_;
};

/// States are the support strings (named by their text form), the initial
/// state is eps, and delta(u, a, ua) = K(ua).
inline FuzzyAutomaton automaton_from_language(const FuzzyLanguage& k) {
  if (k.is_empty()) throw Error(ErrorCode::EmptyLanguage, "cannot build an automaton from the empty language");
  std::vector<std::string> states;
  std::vector<FuzzyAutomaton::Transition> transitions;
  for (const auto& [s, g] : k.entries()) {
    states.push_back(s.to_string());
    if (!s.empty()) transitions.push_back({s.parent().to_string(), s.back(), s.to_string(), g});
  }
  return FuzzyAutomaton(k.alphabet_ptr(), std::move(states), "eps", transitions);
}

}  // namespace fdes
