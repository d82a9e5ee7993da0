#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdes/alphabet.hpp"
#include "fdes/approximation.hpp"
#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/language.hpp"
#include "fdes/predicates.hpp"
#include "fdes/projection.hpp"
#include "fdes/synthesis.hpp"

// Brute-force references for the algorithms above. Everything here is
// exponential and meant for desk-scale instances only.

namespace fdes {

inline constexpr std::uint64_t kDefaultBudget = 20000;

struct EnumerationSpec {
  /// Prefix-closed, contains eps.
  std::vector<EventString> universe;
  GradeLattice lattice;
};

namespace detail {

// base^exp, or budget + 1 once it exceeds the budget.
inline std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > budget / base) return budget + 1;
    out *= base;
  }
  return out;
}

inline void require_budget(std::uint64_t count, std::uint64_t budget, const std::string& what) {
  if (count > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                what + " exceeds the enumeration budget of " + std::to_string(budget) + " candidates");
  }
}

}  // namespace detail

/// Calls `visit` once for every valid language with support inside the
/// universe and grades in the lattice, the empty language included.
inline void enumerate_languages(const AlphabetPtr& alphabet, const EnumerationSpec& spec,
                                const std::function<void(const FuzzyLanguage&)>& visit,
                                std::uint64_t budget = kDefaultBudget) {
  std::vector<EventString> universe = spec.universe;
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.empty() || !universe.front().empty()) {
    throw Error(ErrorCode::P2Violation, "enumeration universe must contain eps");
  }
  std::map<EventString, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    alphabet->require_events(universe[i]);
    index.emplace(universe[i], i);
  }
  std::vector<std::size_t> parent(universe.size(), 0);
  for (std::size_t i = 1; i < universe.size(); ++i) {
    const auto it = index.find(universe[i].parent());
    if (it == index.end()) {
      throw Error(ErrorCode::P2Violation,
                  "enumeration universe is not prefix-closed at '" + universe[i].to_string() + "'");
    }
    parent[i] = it->second;
  }
  detail::require_budget(detail::capped_power(spec.lattice.size(), universe.size(), budget), budget,
                         "language enumeration");

  const std::vector<Grade> values(spec.lattice.values.begin(), spec.lattice.values.end());
  std::vector<Grade> current(universe.size());
  visit(FuzzyLanguage::empty(alphabet));
  current[0] = Grade::one();
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == universe.size()) {
      FuzzyLanguage::Entries entries;
      for (std::size_t j = 0; j < universe.size(); ++j) {
        if (current[j].positive()) entries.emplace(universe[j], current[j]);
      }
      visit(FuzzyLanguage::from_map(alphabet, std::move(entries)));
      return;
    }
    for (const auto& v : values) {
      if (current[parent[i]] < v) break;
      current[i] = v;
      assign(i + 1);
    }
  };
  assign(1);
}

namespace detail {

inline FuzzyLanguage pointwise(const AlphabetPtr& alphabet, const std::vector<FuzzyLanguage>& languages, bool take_min) {
  if (languages.empty()) return FuzzyLanguage::empty(alphabet);
  FuzzyLanguage::Entries out = languages.front().entries();
  for (std::size_t i = 1; i < languages.size(); ++i) {
    const auto& next = languages[i];
    if (take_min) {
      FuzzyLanguage::Entries kept;
      for (const auto& [s, g] : out) {
        const Grade v = meet(g, next.grade(s));
        if (v.positive()) kept.emplace(s, v);
      }
      out = std::move(kept);
    } else {
      for (const auto& [s, g] : next.entries()) {
        auto [it, inserted] = out.emplace(s, g);
        if (!inserted) it->second = join(it->second, g);
      }
    }
  }
  return FuzzyLanguage::from_map(alphabet, std::move(out));
}

}  // namespace detail

/// Pointwise meet of every lattice-valued M with K <= M <= L that is
/// controllable and observable.
inline FuzzyLanguage brute_infimal_co(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                      std::uint64_t budget = kDefaultBudget) {
  detail::require_sublanguage(k, l);
  std::vector<FuzzyLanguage> found;
  const EnumerationSpec spec{l.support(), GradeLattice::of({&k, &l})};
  enumerate_languages(
      l.alphabet_ptr(), spec,
      [&](const FuzzyLanguage& m) {
        if (!is_sublanguage(k, m) || !is_sublanguage(m, l)) return;
        if (is_controllable(m, l, pr.alphabet()) && is_observable(m, l, pr)) found.push_back(m);
      },
      budget);
  return detail::pointwise(l.alphabet_ptr(), found, true);
}

/// Pointwise join of every lattice-valued M <= K that is controllable and
/// normal.
inline FuzzyLanguage brute_supremal_cn(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                       std::uint64_t budget = kDefaultBudget) {
  detail::require_sublanguage(k, l);
  std::vector<FuzzyLanguage> found;
  const EnumerationSpec spec{l.support(), GradeLattice::of({&k, &l})};
  enumerate_languages(
      l.alphabet_ptr(), spec,
      [&](const FuzzyLanguage& m) {
        if (!is_sublanguage(m, k)) return;
        if (is_controllable(m, l, pr.alphabet()) && is_normal(m, l, pr)) found.push_back(m);
      },
      budget);
  return detail::pointwise(l.alphabet_ptr(), found, false);
}

namespace detail {

struct SupervisorShape {
  Projection projection;
  EventSet controllable;
};

// Table entries that can influence the closed loop: (P(s), a) with a
// controlled and sa in supp(L). All others are fixed at their defaults.
inline std::vector<std::pair<EventString, EventId>> relevant_cells(const FuzzyLanguage& l,
                                                                   const SupervisorShape& shape) {
  std::set<std::pair<EventString, EventId>> cells;
  for (const auto& [s, g] : l.entries()) {
    if (s.empty() || !shape.controllable.count(s.back())) continue;
    cells.emplace(shape.projection(s.parent()), s.back());
  }
  return {cells.begin(), cells.end()};
}

inline std::vector<EventString> projected_support(const FuzzyLanguage& l, const Projection& pr) {
  std::set<EventString> rows;
  for (const auto& [s, g] : l.entries()) rows.insert(pr(s));
  return {rows.begin(), rows.end()};
}

// Odometer over every assignment of `values` to the cells of all shapes.
// Stops as soon as `visit` returns true; returns whether it did.
inline bool for_each_supervisor_tuple(const FuzzyLanguage& l, const std::vector<SupervisorShape>& shapes,
                                      const std::vector<Grade>& values, std::uint64_t budget,
                                      const std::function<bool(const std::vector<FuzzySupervisor>&)>& visit) {
  std::vector<std::vector<std::pair<EventString, EventId>>> cells;
  std::size_t total = 0;
  for (const auto& shape : shapes) {
    cells.push_back(relevant_cells(l, shape));
    total += cells.back().size();
  }
  require_budget(capped_power(values.size(), total, budget), budget, "supervisor enumeration");

  std::vector<std::size_t> digits(total, 0);
  while (true) {
    std::vector<FuzzySupervisor> sups;
    std::size_t d = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      FuzzySupervisor::Table table;
      for (const auto& t : projected_support(l, shapes[i].projection)) table[t];
      for (const auto& [t, a] : cells[i]) table[t][a] = values[digits[d++]];
      sups.emplace_back(shapes[i].projection, shapes[i].controllable, table);
    }
    if (visit(sups)) return true;
    std::size_t pos = 0;
    while (pos < total && ++digits[pos] == values.size()) digits[pos++] = 0;
    if (pos == total) return false;
  }
}

// Enable grades only meet L-grades and closed-loop grades, so rounding an
// enable grade up to the next lattice value never changes whether K (whose
// grades are in the lattice) is produced. The lattice therefore suffices.
inline std::vector<Grade> supervisor_values(const FuzzyLanguage& k, const FuzzyLanguage& l,
                                            const std::vector<Grade>& extra) {
  GradeLattice lattice = GradeLattice::of({&k, &l});
  lattice.values.insert(extra.begin(), extra.end());
  return {lattice.values.begin(), lattice.values.end()};
}

}  // namespace detail

/// Whether some supervisor over Pr has closed loop exactly K. `extra` adds
/// enable grades beyond the lattice.
inline bool brute_supervisor_exists(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr,
                                    std::uint64_t budget = kDefaultBudget, const std::vector<Grade>& extra = {}) {
  detail::require_sublanguage(k, l);
  const std::vector<detail::SupervisorShape> shapes{{pr, pr.alphabet().controllable()}};
  return detail::for_each_supervisor_tuple(l, shapes, detail::supervisor_values(k, l, extra), budget,
                                           [&](const std::vector<FuzzySupervisor>& sups) {
                                             return closed_loop_central(l, sups[0]) == k;
                                           });
}

/// Whether some supervisor over Pr has L_a <= closed loop <= L_l. Rounding
/// an enable grade up to the lattice keeps both bounds: the closed loop only
/// grows, and any bound in the lattice that held still holds.
inline bool brute_scp_exists(const FuzzyLanguage& la, const FuzzyLanguage& ll, const FuzzyLanguage& l,
                             const Projection& pr, std::uint64_t budget = kDefaultBudget) {
  detail::require_sublanguage(la, l);
  detail::require_sublanguage(ll, l);
  GradeLattice lattice = GradeLattice::of({&la, &ll, &l});
  const std::vector<Grade> values(lattice.values.begin(), lattice.values.end());
  const std::vector<detail::SupervisorShape> shapes{{pr, pr.alphabet().controllable()}};
  return detail::for_each_supervisor_tuple(l, shapes, values, budget, [&](const std::vector<FuzzySupervisor>& sups) {
    const FuzzyLanguage cl = closed_loop_central(l, sups[0]);
    return is_sublanguage(la, cl) && is_sublanguage(cl, ll);
  });
}

/// Whether some pair of local supervisors over the alphabet's sites has
/// closed loop exactly K.
inline bool brute_decentralized_supervisor_exists(const FuzzyLanguage& k, const FuzzyLanguage& l,
                                                  const AlphabetPtr& alphabet,
                                                  std::uint64_t budget = kDefaultBudget) {
  detail::require_sublanguage(k, l);
  const auto sites = site_controls(alphabet);
  const std::vector<detail::SupervisorShape> shapes{{sites[0].projection, sites[0].controllable},
                                                    {sites[1].projection, sites[1].controllable}};
  return detail::for_each_supervisor_tuple(l, shapes, detail::supervisor_values(k, l, {}), budget,
                                           [&](const std::vector<FuzzySupervisor>& sups) {
                                             return closed_loop_decentralized(l, sups[0], sups[1]) == k;
                                           });
}

namespace detail {

struct Interval {
  Grade lo;
  Grade hi;
};

// {x in [0,1] : K(sa) = K(s) min L(sa) min x}, always an interval here.
inline std::optional<Interval> enable_solutions(const FuzzyLanguage& k, const FuzzyLanguage& l, const EventString& s,
                                                const EventId& a) {
  const EventString sa = s.then(a);
  const Grade target = k.grade(sa);
  const Grade cap = meet(k.grade(s), l.grade(sa));
  if (target == cap) return Interval{cap, Grade::one()};
  if (target < cap) return Interval{target, target};
  return std::nullopt;
}

template <typename PairTest>
bool pairwise_holds(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr, PairTest test) {
  require_sublanguage(k, l);
  const auto support = k.support();
  for (const auto& s : support) {
    for (const auto& sp : support) {
      if (pr(s) != pr(sp)) continue;
      for (const auto& a : pr.alphabet().controllable()) {
        if (!k.grade(s.then(a)).positive()) continue;
        const auto xs = enable_solutions(k, l, s, a);
        const auto xsp = enable_solutions(k, l, sp, a);
        if (!xs || !xsp || !test(*xs, *xsp)) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Observability read literally: for every pair s, s' in one class and
/// controllable a with sa in supp(K), some x solving the s-equation also
/// solves the s'-equation.
inline bool pairwise_observable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  return detail::pairwise_holds(k, l, pr, [](const detail::Interval& x, const detail::Interval& y) {
    return join(x.lo, y.lo) <= meet(x.hi, y.hi);
  });
}

/// As above, with "some x" replaced by "every x".
inline bool pairwise_strongly_observable(const FuzzyLanguage& k, const FuzzyLanguage& l, const Projection& pr) {
  return detail::pairwise_holds(k, l, pr, [](const detail::Interval& x, const detail::Interval& y) {
    return y.lo <= x.lo && x.hi <= y.hi;
  });
}

enum class CrispKind { Controllability, Observability, Normality, Coobservability };

inline std::string_view to_string(CrispKind kind) {
  switch (kind) {
    case CrispKind::Controllability: return "controllability";
    case CrispKind::Observability: return "observability";
    case CrispKind::Normality: return "normality";
    case CrispKind::Coobservability: return "coobservability";
  }
  return "unknown";
}

namespace detail {

using Word = std::vector<std::string>;
using WordSet = std::set<Word>;

inline WordSet crisp_set(const FuzzyLanguage& k) {
  WordSet out;
  for (const auto& [s, g] : k.entries()) {
    if (!g.is_one()) throw Error(ErrorCode::NotCrisp, "'" + s.to_string() + "' has grade " + g.to_string());
    Word w;
    for (const auto& e : s.events()) w.push_back(e.name());
    out.insert(std::move(w));
  }
  return out;
}

inline std::set<std::string> names(const EventSet& set) {
  std::set<std::string> out;
  for (const auto& e : set) out.insert(e.name());
  return out;
}

inline Word erase_unobserved(const Word& w, const std::set<std::string>& observed) {
  Word out;
  for (const auto& e : w) {
    if (observed.count(e)) out.push_back(e);
  }
  return out;
}

inline Word extend(Word w, const std::string& e) {
  w.push_back(e);
  return w;
}

}  // namespace detail

/// Classical set-based verdicts for {0,1}-valued K and L, written without
/// the fuzzy code paths.
inline bool crisp_reference(CrispKind kind, const FuzzyLanguage& k, const FuzzyLanguage& l, const Alphabet& alphabet) {
  using detail::extend;
  using detail::Word;
  const detail::WordSet kset = detail::crisp_set(k);
  const detail::WordSet lset = detail::crisp_set(l);
  const auto in = [](const detail::WordSet& set, const Word& w) { return set.count(w) != 0; };
  const auto all = detail::names(alphabet.events());
  const auto ctrl = detail::names(alphabet.controllable());
  const auto obs = detail::names(alphabet.observable());

  switch (kind) {
    case CrispKind::Controllability:
      for (const auto& s : kset) {
        for (const auto& a : all) {
          if (!ctrl.count(a) && in(lset, extend(s, a)) && !in(kset, extend(s, a))) return false;
        }
      }
      return true;
    case CrispKind::Observability:
      for (const auto& s : kset) {
        for (const auto& sp : kset) {
          if (detail::erase_unobserved(s, obs) != detail::erase_unobserved(sp, obs)) continue;
          for (const auto& a : ctrl) {
            if (in(kset, extend(s, a)) && in(lset, extend(sp, a)) && !in(kset, extend(sp, a))) return false;
          }
        }
      }
      return true;
    case CrispKind::Normality: {
      std::set<Word> image;
      for (const auto& s : kset) image.insert(detail::erase_unobserved(s, obs));
      for (const auto& s : lset) {
        if (in(kset, s) != (image.count(detail::erase_unobserved(s, obs)) != 0)) return false;
      }
      return true;
    }
    case CrispKind::Coobservability: {
      if (!alphabet.sites()) throw Error(ErrorCode::InvalidAlphabet, "alphabet has no site specs");
      const auto& sites = *alphabet.sites();
      const auto c1 = detail::names(sites[0].controllable);
      const auto c2 = detail::names(sites[1].controllable);
      const auto o1 = detail::names(sites[0].observable);
      const auto o2 = detail::names(sites[1].observable);
      // Whether some s' in K with P_i(s') = P_i(s) has s'a in K.
      const auto seen = [&](const Word& s, const std::string& a, const std::set<std::string>& o) {
        const Word target = detail::erase_unobserved(s, o);
        for (const auto& sp : kset) {
          if (detail::erase_unobserved(sp, o) == target && in(kset, extend(sp, a))) return true;
        }
        return false;
      };
      for (const auto& s : kset) {
        for (const auto& a : ctrl) {
          if (!in(lset, extend(s, a)) || in(kset, extend(s, a))) continue;
          const bool by1 = c1.count(a) != 0;
          const bool by2 = c2.count(a) != 0;
          const bool forced1 = !by1 || seen(s, a, o1);
          const bool forced2 = !by2 || seen(s, a, o2);
          if (forced1 && forced2) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace fdes
