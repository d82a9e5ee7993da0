#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/language.hpp"
#include "fdes/predicates.hpp"
#include "fdes/projection.hpp"

namespace fdes {

/// Raised when synthesis preconditions fail. Carries every failing check.
class ConditionViolated : public Error {
 public:
  ConditionViolated(const std::string& property, CheckReport report)
      : Error(ErrorCode::ConditionViolated, "specification is not " + property +
                                                (report.witnesses.empty() ? std::string()
                                                                          : ": " + describe(report.witnesses.front()))),
        property_(property),
        report_(std::move(report)) {}

  const std::string& property() const noexcept { return property_; }
  const CheckReport& report() const noexcept { return report_; }

 private:
  std::string property_;
  CheckReport report_;
};

/// Map from observed strings to per-event enable grades. Rows are dense:
/// every event of the alphabet has an entry, and events outside
/// `controllable` are pinned to 1.
class FuzzySupervisor {
 public:
  using Row = std::map<EventId, Grade>;
  using Table = std::map<EventString, Row>;

  /// Missing controllable entries default to 0, missing others to 1.
  FuzzySupervisor(Projection projection, EventSet controllable, const Table& table)
      : projection_(std::move(projection)), controllable_(std::move(controllable)) {
    const Alphabet& alphabet = projection_.alphabet();
    for (const auto& e : controllable_) {
      if (!alphabet.contains(e)) {
        throw Error(ErrorCode::UnknownEvent, "supervisor controllable event '" + e.name() + "' is not in the alphabet");
      }
    }
    for (const auto& [observed, given] : table) {
      for (const auto& e : observed.events()) {
        if (!projection_.observes(e)) {
          throw Error(ErrorCode::InvalidSupervisor,
                      "row '" + observed.to_string() + "' contains unobservable event '" + e.name() + "'");
        }
      }
      Row row;
      for (const auto& e : alphabet.events()) row.emplace(e, is_controlled(e) ? Grade::zero() : Grade::one());
      for (const auto& [e, g] : given) {
        if (!alphabet.contains(e)) {
          throw Error(ErrorCode::UnknownEvent, "row '" + observed.to_string() + "' enables unknown event '" +
                                                   e.name() + "'");
        }
        if (!is_controlled(e) && !g.is_one()) {
          throw Error(ErrorCode::InvalidSupervisor, "row '" + observed.to_string() + "' enables event '" +
                                                        e.name() + "' at " + g.to_string() +
                                                        " but it is not controllable here, so it must be 1");
        }
        row[e] = g;
      }
      table_.emplace(observed, std::move(row));
    }
  }

  /// Supervisor enabling every event at grade 1 on the given observed strings.
  static FuzzySupervisor neutral(Projection projection, EventSet controllable, const std::vector<EventString>& rows) {
    Table table;
    for (const auto& t : rows) {
      Row row;
      for (const auto& e : projection.alphabet().events()) row.emplace(e, Grade::one());
      table.emplace(t, std::move(row));
    }
    return FuzzySupervisor(std::move(projection), std::move(controllable), table);
  }

  const Projection& projection() const noexcept { return projection_; }
  const EventSet& controllable() const noexcept { return controllable_; }
  const Table& table() const noexcept { return table_; }
  bool is_controlled(const EventId& e) const { return controllable_.count(e) != 0; }
  bool has_row(const EventString& observed) const { return table_.count(observed) != 0; }

  const Row& row(const EventString& observed) const {
    const auto it = table_.find(observed);
    if (it == table_.end()) {
      throw Error(ErrorCode::SupervisorDomainGap, "supervisor has no row for observed string '" +
                                                      observed.to_string() + "'");
    }
    return it->second;
  }

  Grade enable(const EventString& observed, const EventId& event) const {
    const Row& r = row(observed);
    const auto it = r.find(event);
    if (it == r.end()) {
      throw Error(ErrorCode::SupervisorDomainGap,
                  "row '" + observed.to_string() + "' has no entry for event '" + event.name() + "'");
    }
    return it->second;
  }

  friend bool operator==(const FuzzySupervisor& a, const FuzzySupervisor& b) {
    return a.projection_.alphabet().events() == b.projection_.alphabet().events() &&
           a.projection_.observable() == b.projection_.observable() && a.controllable_ == b.controllable_ &&
           a.table_ == b.table_;
  }

 private:
  Projection projection_;
  EventSet controllable_;
  Table table_;
};

namespace detail {

inline void require_supervisor_domain(const FuzzyLanguage& l, const FuzzySupervisor& s) {
  if (l.alphabet().events() != s.projection().alphabet().events()) {
    throw Error(ErrorCode::AlphabetMismatch, "supervisor and plant are over different event sets");
  }
  for (const auto& [str, g] : l.entries()) {
    const EventString observed = s.projection()(str);
    if (!s.has_row(observed)) {
      throw Error(ErrorCode::SupervisorDomainGap, "supervisor has no row for observed string '" +
                                                      observed.to_string() + "' (projection of '" +
                                                      str.to_string() + "')");
    }
  }
}

// L(sa) min CL(s) min every supervisor's enable grade, in shortlex order so
// each parent is final before its children.
inline FuzzyLanguage closed_loop(const FuzzyLanguage& l, const std::vector<const FuzzySupervisor*>& sups) {
  for (const auto* s : sups) require_supervisor_domain(l, *s);
  FuzzyLanguage::Entries out;
  for (const auto& [s, g] : l.entries()) {
    if (s.empty()) {
      out.emplace(s, Grade::one());
      continue;
    }
    const auto parent = out.find(s.parent());
    if (parent == out.end()) continue;
    Grade v = meet(g, parent->second);
    for (const auto* sup : sups) v = meet(v, sup->enable(sup->projection()(s.parent()), s.back()));
    if (v.positive()) out.emplace(s, v);
  }
  return FuzzyLanguage::from_map(l.alphabet_ptr(), std::move(out));
}

// Row(t)(a) = max of K(s'a) over s' in supp(K) with P(s') = t, for each
// controlled a; rows cover P(supp L).
inline FuzzySupervisor formula_supervisor(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                          const EventSet& controllable) {
  const ProjectionClasses classes = projection_classes(pr, k);
  FuzzySupervisor::Table table;
  for (const auto& [s, g] : l.entries()) {
    const EventString t = pr(s);
    if (table.count(t)) continue;
    FuzzySupervisor::Row row;
    const auto cls = classes.find(t);
    for (const auto& a : controllable) {
      Grade x;
      if (cls != classes.end()) {
        for (const auto& member : cls->second) x = join(x, k.grade(member.then(a)));
      }
      row.emplace(a, x);
    }
    table.emplace(t, std::move(row));
  }
  return FuzzySupervisor(pr, controllable, table);
}

inline void require_nonempty_spec(const FuzzyLanguage& k) {
  if (k.is_empty()) throw Error(ErrorCode::EmptySpec, "specification is the empty language");
}

}  // namespace detail

/// Single supervisor over Pr, achieving K whenever K is controllable and
/// observable. With `force` the checks are skipped.
inline FuzzySupervisor synthesize_central(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                          bool force = false) {
  detail::require_nonempty_spec(k);
  detail::require_sublanguage(k, l);
  const EventSet& controllable = pr.alphabet().controllable();
  if (!force) {
    if (CheckReport r = is_controllable(k, l, pr.alphabet()); !r) throw ConditionViolated("controllable", r);
    if (CheckReport r = is_observable(k, l, pr, controllable); !r) throw ConditionViolated("observable", r);
  }
  return detail::formula_supervisor(k, l, pr, controllable);
}

inline FuzzyLanguage closed_loop_central(const FuzzyLanguage& l, const FuzzySupervisor& s) {
  return detail::closed_loop(l, {&s});
}

/// Two local supervisors over the alphabet's site specs. They achieve K
/// jointly whenever K is controllable and co-observable.
inline std::pair<FuzzySupervisor, FuzzySupervisor> synthesize_decentralized(const FuzzyLanguage& k,
                                                                           const FuzzyLanguage& l,
                                                                           const AlphabetPtr& alphabet,
                                                                           bool force = false) {
  detail::require_nonempty_spec(k);
  detail::require_sublanguage(k, l);
  if (alphabet->events() != l.alphabet().events()) {
    throw Error(ErrorCode::AlphabetMismatch, "site alphabet and plant are over different event sets");
  }
  const auto sites = site_controls(alphabet);
  if (!force) {
    if (CheckReport r = is_controllable(k, l, *alphabet); !r) throw ConditionViolated("controllable", r);
    if (CheckReport r = is_coobservable(k, l, sites[0], sites[1]); !r) throw ConditionViolated("co-observable", r);
  }
  return {detail::formula_supervisor(k, l, sites[0].projection, sites[0].controllable),
          detail::formula_supervisor(k, l, sites[1].projection, sites[1].controllable)};
}

inline FuzzyLanguage closed_loop_decentralized(const FuzzyLanguage& l, const FuzzySupervisor& s1,
                                               const FuzzySupervisor& s2) {
  return detail::closed_loop(l, {&s1, &s2});
}

inline bool verify_achieves(const FuzzyLanguage& k, const FuzzyLanguage& result) { return k == result; }

}  // namespace fdes
