#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/language.hpp"
#include "fdes/predicates.hpp"
#include "fdes/projection.hpp"
#include "fdes/synthesis.hpp"

namespace fdes {

/// Grades of the given languages plus 0 and 1. Totally ordered, so closed
/// under min and max.
struct GradeLattice {
  std::set<Grade> values;

  static GradeLattice of(std::initializer_list<const FuzzyLanguage*> languages) {
    GradeLattice out;
    out.values = {Grade::zero(), Grade::one()};
    for (const auto* l : languages) {
      for (const auto& [s, g] : l->entries()) out.values.insert(g);
    }
    return out;
  }

  std::size_t size() const noexcept { return values.size(); }
  bool contains(const Grade& g) const { return values.count(g) != 0; }
};

/// Least controllable and observable M with K <= M <= L. Raising fixed
/// point: every assignment is a min of existing grades, and each raise is
/// forced on any controllable-and-observable superlanguage of the current
/// iterate, so the limit is the least one.
inline FuzzyLanguage infimal_co(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  detail::require_sublanguage(k, l);
  if (k.is_empty()) return k;
  const EventSet uncontrollable = pr.alphabet().uncontrollable();
  const EventSet& controllable = pr.alphabet().controllable();
  FuzzyLanguage::Entries m = k.entries();
  const auto get = [&m](const EventString& s) {
    const auto it = m.find(s);
    return it == m.end() ? Grade::zero() : it->second;
  };
  const auto raise = [&](const EventString& s, const Grade& v) {
    if (!v.positive() || !(get(s) < v)) return false;
    m[s] = v;
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = m;
    for (const auto& [s, g] : snapshot) {
      for (const auto& a : uncontrollable) {
        const EventString sa = s.then(a);
        changed |= raise(sa, meet(get(s), l.grade(sa)));
      }
    }
    std::map<EventString, std::vector<EventString>> classes;
    for (const auto& [s, g] : m) classes[pr(s)].push_back(s);
    for (const auto& [observed, members] : classes) {
      for (const auto& a : controllable) {
        Grade x;
        for (const auto& t : members) x = join(x, get(t.then(a)));
        if (!x.positive()) continue;
        for (const auto& s : members) {
          const EventString sa = s.then(a);
          changed |= raise(sa, meet(meet(get(s), l.grade(sa)), x));
        }
      }
    }
  }
  return FuzzyLanguage::from_map(k.alphabet_ptr(), std::move(m));
}

/// Greatest controllable and normal M <= K. Any normal M is
/// w -> m(P(w)) min L(w) for a grade map m on P(supp L), so the fixed point
/// lowers m instead of M: start from P(K), then repeatedly
///  - subset: m(P(s)) min L(s) must not exceed K(s);
///  - controllability: for observable uncontrollable a, m(P(s)a) min L(sa)
///    must reach m(P(s)) min L(sa), else m(P(s)) drops to m(P(s)a);
///  - prefix: m(ca) <= m(c).
/// Each lowering is forced on every admissible m below the current one.
inline FuzzyLanguage supremal_cn(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  detail::require_sublanguage(k, l);
  if (k.is_empty()) return k;
  std::map<EventString, Grade> m;
  for (const auto& [s, g] : l.entries()) {
    auto [it, inserted] = m.emplace(pr(s), k.grade(s));
    if (!inserted) it->second = join(it->second, k.grade(s));
  }
  const EventSet uncontrollable = pr.alphabet().uncontrollable();
  const auto lower = [&m](const EventString& c, const Grade& v) {
    Grade& cur = m.at(c);
    if (!(v < cur)) return false;
    cur = v;
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [s, g] : l.entries()) {
      const EventString c = pr(s);
      for (const auto& a : uncontrollable) {
        if (!pr.observes(a)) continue;
        const EventString sa = s.then(a);
        const Grade lsa = l.grade(sa);
        if (!lsa.positive()) continue;
        const Grade next = m.at(c.then(a));
        if (next < meet(m.at(c), lsa)) changed |= lower(c, next);
      }
    }
    for (const auto& [s, g] : l.entries()) {
      if (k.grade(s) < meet(m.at(pr(s)), g)) changed |= lower(pr(s), k.grade(s));
    }
    for (auto& [c, v] : m) {
      if (c.empty()) continue;
      changed |= lower(c, meet(v, m.at(c.parent())));
    }
  }

  if (!m.at(EventString{}).is_one()) return FuzzyLanguage::empty(k.alphabet_ptr());
  FuzzyLanguage::Entries out;
  for (const auto& [s, g] : l.entries()) {
    const Grade v = meet(m.at(pr(s)), g);
    if (v.positive()) out.emplace(s, v);
  }
  return FuzzyLanguage::from_map(k.alphabet_ptr(), std::move(out));
}

struct ScpOutcome {
  std::optional<FuzzySupervisor> supervisor;
  /// Infimal controllable-and-observable superlanguage of the minimal spec.
  FuzzyLanguage infimal;

  bool solved() const noexcept { return supervisor.has_value(); }
};

/// Supervisor whose closed loop lies between L_a and L_l, if one exists.
inline ScpOutcome scp(const FuzzyLanguage& la, const FuzzyLanguage& ll, const FuzzyLanguage& l,
                      const Projection& pr) {
  if (la.is_empty()) throw Error(ErrorCode::EmptyMinSpec, "minimal acceptable language is empty");
  if (!is_sublanguage(la, ll)) throw Error(ErrorCode::PreconditionChain, "minimal language is not within the legal one");
  if (!is_sublanguage(ll, l)) throw Error(ErrorCode::PreconditionChain, "legal language is not within the plant");
  FuzzyLanguage infimal = infimal_co(la, l, pr);
  if (!is_sublanguage(infimal, ll)) return {std::nullopt, std::move(infimal)};
  FuzzySupervisor sup = synthesize_central(infimal, l, pr);
  return {std::move(sup), std::move(infimal)};
}

}  // namespace fdes
