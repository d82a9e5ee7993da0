#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/language.hpp"
#include "fdes/projection.hpp"

namespace fdes {

enum class WitnessKind {
  Controllability,
  Observability,
  StrongObsCond1,
  StrongObsCond2,
  Normality,
  CoobsCase1,
  CoobsCase2,
  CoobsCase3,
};

inline std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Controllability: return "CONTROLLABILITY";
    case WitnessKind::Observability: return "OBSERVABILITY";
    case WitnessKind::StrongObsCond1: return "STRONG_OBS_COND1";
    case WitnessKind::StrongObsCond2: return "STRONG_OBS_COND2";
    case WitnessKind::Normality: return "NORMALITY";
    case WitnessKind::CoobsCase1: return "COOBS_CASE1";
    case WitnessKind::CoobsCase2: return "COOBS_CASE2";
    case WitnessKind::CoobsCase3: return "COOBS_CASE3";
  }
  return "UNKNOWN";
}

/// One violated equation. `lhs`/`rhs` are its two sides; for strong
/// observability condition 2 they are the grades of s.a and s'.a, and for
/// condition 1 they are the two tightness gaps' left sides.
struct Witness {
  WitnessKind kind;
  std::vector<EventString> strings;
  std::optional<EventId> event;
  Grade lhs;
  Grade rhs;
  std::vector<EventString> projection_class;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::vector<Witness> witnesses;

  bool holds() const noexcept { return witnesses.empty(); }
  explicit operator bool() const noexcept { return holds(); }
};

inline std::string describe(const Witness& w) {
  std::string out(to_string(w.kind));
  if (!w.projection_class.empty()) {
    out += " class {";
    for (std::size_t i = 0; i < w.projection_class.size(); ++i) {
      if (i) out += ", ";
      out += w.projection_class[i].to_string();
    }
    out += "}";
  }
  if (w.event) out += " event " + w.event->name();
  out += w.strings.size() > 1 ? " strings" : " string";
  for (const auto& s : w.strings) out += " " + s.to_string();
  out += " lhs " + w.lhs.to_string() + " rhs " + w.rhs.to_string();
  return out;
}

namespace detail {

inline void require_sublanguage(const FuzzyLanguage& k, const FuzzyLanguage& l) {
  if (!is_sublanguage(k, l)) throw Error(ErrorCode::NotSublanguage, "specification is not contained in the plant");
}

// K(s) min L(sa): the largest value K(sa) may take.
inline Grade ceiling(const FuzzyLanguage& k, const FuzzyLanguage& l, const EventString& s, const EventString& sa) {
  return meet(k.grade(s), l.grade(sa));
}

}  // namespace detail

/// K(sa) = K(s) min L(sa) for every s in supp(K) and uncontrollable a.
/// Strings outside supp(K) or with L(sa) = 0 satisfy the equation trivially.
inline CheckReport is_controllable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Alphabet& alphabet) {
  detail::require_sublanguage(k, l);
  CheckReport report;
  const EventSet uncontrollable = alphabet.uncontrollable();
  for (const auto& [s, g] : k.entries()) {
    for (const auto& a : uncontrollable) {
      const EventString sa = s.then(a);
      if (!l.grade(sa).positive()) continue;
      const Grade lhs = k.grade(sa);
      const Grade rhs = detail::ceiling(k, l, s, sa);
      if (lhs != rhs) report.witnesses.push_back({WitnessKind::Controllability, {s}, a, lhs, rhs, {}});
    }
  }
  return report;
}

/// Class-based observability test: for each projection class C of supp(K)
/// and controllable a, the candidate enable degree x* = max over t in C of
/// K(ta) must satisfy K(s'a) = K(s') min L(s'a) min x* for every s' in C.
/// If any common x exists, x* is one, so no other value needs trying.
inline CheckReport is_observable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                 const EventSet& controllable) {
  detail::require_sublanguage(k, l);
  CheckReport report;
  const ProjectionClasses classes = projection_classes(pr, k);
  for (const auto& [observed, members] : classes) {
    for (const auto& a : controllable) {
      Grade x;
      for (const auto& t : members) x = join(x, k.grade(t.then(a)));
      for (const auto& s : members) {
        const EventString sa = s.then(a);
        const Grade lhs = k.grade(sa);
        const Grade rhs = meet(detail::ceiling(k, l, s, sa), x);
        if (lhs != rhs) {
          report.witnesses.push_back({WitnessKind::Observability, {s}, a, lhs, rhs, members});
          break;
        }
      }
    }
  }
  return report;
}

inline CheckReport is_observable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  return is_observable(k, l, pr, pr.alphabet().controllable());
}

/// Pairwise characterization: for s, s' in one class and controllable a with
/// L(sa), L(s'a) > 0, (1) s.a is tight iff s'.a is tight, and (2) K(sa) = K(s'a).
inline CheckReport is_strongly_observable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                          const EventSet& controllable) {
  detail::require_sublanguage(k, l);
  CheckReport report;
  const ProjectionClasses classes = projection_classes(pr, k);
  for (const auto& [observed, members] : classes) {
    for (const auto& a : controllable) {
      bool reported = false;
      for (std::size_t i = 0; i < members.size() && !reported; ++i) {
        const EventString sa = members[i].then(a);
        if (!l.grade(sa).positive()) continue;
        for (std::size_t j = i + 1; j < members.size() && !reported; ++j) {
          const EventString ta = members[j].then(a);
          if (!l.grade(ta).positive()) continue;
          const bool tight_s = k.grade(sa) == detail::ceiling(k, l, members[i], sa);
          const bool tight_t = k.grade(ta) == detail::ceiling(k, l, members[j], ta);
          if (tight_s != tight_t) {
            report.witnesses.push_back(
                {WitnessKind::StrongObsCond1, {members[i], members[j]}, a, k.grade(sa), k.grade(ta), members});
            reported = true;
          } else if (k.grade(sa) != k.grade(ta)) {
            report.witnesses.push_back(
                {WitnessKind::StrongObsCond2, {members[i], members[j]}, a, k.grade(sa), k.grade(ta), members});
            reported = true;
          }
        }
      }
    }
  }
  return report;
}

inline CheckReport is_strongly_observable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  return is_strongly_observable(k, l, pr, pr.alphabet().controllable());
}

/// K = P^-1[P(K)] min L, compared on supp(L).
inline CheckReport is_normal(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  detail::require_sublanguage(k, l);
  CheckReport report;
  const FuzzyLanguage closure = inverse_project_meet(pr, project_language(pr, k), l);
  for (const auto& [s, g] : l.entries()) {
    const Grade lhs = k.grade(s);
    const Grade rhs = closure.grade(s);
    if (lhs != rhs) report.witnesses.push_back({WitnessKind::Normality, {s}, std::nullopt, lhs, rhs, {}});
  }
  return report;
}

/// Observation and control capability of one local supervisor.
struct SiteControl {
  Projection projection;
  EventSet controllable;
};

inline std::array<SiteControl, 2> site_controls(const AlphabetPtr& alphabet) {
  if (!alphabet->sites()) throw Error(ErrorCode::InvalidAlphabet, "alphabet has no site specs");
  const auto& sites = *alphabet->sites();
  return {SiteControl{Projection::site(alphabet, 0), sites[0].controllable},
          SiteControl{Projection::site(alphabet, 1), sites[1].controllable}};
}

/// For every s in supp(K) and a in E_1c u E_2c, K(sa) must equal
/// K(s) min L(sa) min the class-joins of the sites that control a.
inline CheckReport is_coobservable(const FuzzyLanguage& k, const FuzzyLanguage& l, const SiteControl& site1,
                                   const SiteControl& site2) {
  detail::require_sublanguage(k, l);
  EventSet cover = site1.controllable;
  cover.insert(site2.controllable.begin(), site2.controllable.end());
  if (cover != site1.projection.alphabet().controllable()) {
    throw Error(ErrorCode::SiteCoverViolation, "site controllable sets {" + join_events(cover) +
                                                   "} do not cover E_c = {" +
                                                   join_events(site1.projection.alphabet().controllable()) + "}");
  }
  const ProjectionClasses classes1 = projection_classes(site1.projection, k);
  const ProjectionClasses classes2 = projection_classes(site2.projection, k);
  const auto class_join = [&](const ProjectionClasses& classes, const Projection& pr, const EventString& s,
                              const EventId& a) {
    Grade x;
    for (const auto& t : classes.at(pr(s))) x = join(x, k.grade(t.then(a)));
    return x;
  };

  CheckReport report;
  for (const auto& [s, g] : k.entries()) {
    for (const auto& a : cover) {
      const bool in1 = site1.controllable.count(a) != 0;
      const bool in2 = site2.controllable.count(a) != 0;
      const EventString sa = s.then(a);
      Grade rhs = detail::ceiling(k, l, s, sa);
      if (in1) rhs = meet(rhs, class_join(classes1, site1.projection, s, a));
      if (in2) rhs = meet(rhs, class_join(classes2, site2.projection, s, a));
      const Grade lhs = k.grade(sa);
      if (lhs == rhs) continue;
      const WitnessKind kind =
          in1 && in2 ? WitnessKind::CoobsCase1 : (in1 ? WitnessKind::CoobsCase2 : WitnessKind::CoobsCase3);
      report.witnesses.push_back({kind, {s}, a, lhs, rhs, {}});
    }
  }
  return report;
}

}  // namespace fdes
