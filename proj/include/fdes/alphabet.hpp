#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdes/error.hpp"

namespace fdes {

/// Event name: letters, digits and underscores. `eps` is reserved for the
/// empty string in text formats and cannot name an event.
class EventId {
 public:
  EventId() = default;
  explicit EventId(std::string name) : name_(std::move(name)) {
    if (!valid(name_)) throw Error(ErrorCode::UnknownEvent, "'" + name_ + "' is not a valid event name");
  }

  static bool valid(std::string_view name) {
    if (name.empty() || name == "eps") return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const EventId&, const EventId&) = default;
  friend auto operator<=>(const EventId&, const EventId&) = default;

 private:
  std::string name_;
};

inline std::ostream& operator<<(std::ostream& os, const EventId& e) { return os << e.name(); }

using EventSet = std::set<EventId>;

/// A finite event sequence. Ordering is shortlex: shorter strings first, then
/// lexicographic by event name. Every prefix therefore sorts before its
/// extensions, which the length-ordered recursions rely on.
class EventString {
 public:
  EventString() = default;
  explicit EventString(std::vector<EventId> events) : events_(std::move(events)) {}
  EventString(std::initializer_list<EventId> events) : events_(events) {}

  const std::vector<EventId>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  const EventId& operator[](std::size_t i) const { return events_[i]; }
  const EventId& back() const { return events_.back(); }

  EventString prefix(std::size_t n) const {
    return EventString(std::vector<EventId>(events_.begin(), events_.begin() + static_cast<long>(n)));
  }
  EventString suffix_from(std::size_t n) const {
    return EventString(std::vector<EventId>(events_.begin() + static_cast<long>(n), events_.end()));
  }
  /// The string without its last event; requires non-empty.
  EventString parent() const { return prefix(events_.size() - 1); }

  EventString then(const EventId& e) const {
    EventString out = *this;
    out.events_.push_back(e);
    return out;
  }
  EventString concat(const EventString& other) const {
    EventString out = *this;
    out.events_.insert(out.events_.end(), other.events_.begin(), other.events_.end());
    return out;
  }

  /// `eps` or the event names joined by '.'.
  std::string to_string() const {
    if (events_.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < events_.size(); ++i) {
      if (i) out += '.';
      out += events_[i].name();
    }
    return out;
  }

  friend bool operator==(const EventString&, const EventString&) = default;
  friend std::strong_ordering operator<=>(const EventString& a, const EventString& b) {
    if (auto c = a.events_.size() <=> b.events_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.events_.begin(), a.events_.end(),
                                                  b.events_.begin(), b.events_.end());
  }

 private:
  std::vector<EventId> events_;
};

inline std::ostream& operator<<(std::ostream& os, const EventString& s) { return os << s.to_string(); }

/// Inverse of EventString::to_string. Does not check alphabet membership.
inline EventString parse_event_string(std::string_view text) {
  if (text == "eps") return {};
  std::vector<EventId> events;
  std::size_t start = 0;
  while (true) {
    const auto dot = text.find('.', start);
    const auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (!EventId::valid(piece)) {
      throw Error(ErrorCode::UnknownEvent, "'" + std::string(text) + "' is not a valid event string");
    }
    events.emplace_back(std::string(piece));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return EventString(std::move(events));
}

inline std::string join_events(const EventSet& set) {
  std::string out;
  for (const auto& e : set) {
    if (!out.empty()) out += ' ';
    out += e.name();
  }
  return out;
}

/// Control and observation capability of one local supervisor.
struct SiteSpec {
  EventSet controllable;
  EventSet observable;

  friend bool operator==(const SiteSpec&, const SiteSpec&) = default;
};

using SitePair = std::array<SiteSpec, 2>;

/// Event set with its controllable and observable subsets, plus optional
/// site specs for two-supervisor problems.
class Alphabet {
 public:
  Alphabet(EventSet events, EventSet controllable, EventSet observable,
           std::optional<SitePair> sites = std::nullopt)
      : events_(std::move(events)),
        controllable_(std::move(controllable)),
        observable_(std::move(observable)),
        sites_(std::move(sites)) {
    require_subset(controllable_, "controllable");
    require_subset(observable_, "observable");
    if (sites_) {
      EventSet cover_c;
      EventSet cover_o;
      for (std::size_t i = 0; i < sites_->size(); ++i) {
        const auto& site = (*sites_)[i];
        const std::string tag = "site" + std::to_string(i + 1);
        require_within(site.controllable, controllable_, tag + " controllable", "controllable");
        require_within(site.observable, observable_, tag + " observable", "observable");
        cover_c.insert(site.controllable.begin(), site.controllable.end());
        cover_o.insert(site.observable.begin(), site.observable.end());
      }
      if (cover_c != controllable_) {
        throw Error(ErrorCode::SiteCoverViolation,
                    "site controllable sets {" + join_events(cover_c) + "} do not cover {" +
                        join_events(controllable_) + "}");
      }
      if (cover_o != observable_) {
        throw Error(ErrorCode::SiteCoverViolation,
                    "site observable sets {" + join_events(cover_o) + "} do not cover {" +
                        join_events(observable_) + "}");
      }
    }
  }

  const EventSet& events() const noexcept { return events_; }
  const EventSet& controllable() const noexcept { return controllable_; }
  const EventSet& observable() const noexcept { return observable_; }
  const std::optional<SitePair>& sites() const noexcept { return sites_; }

  EventSet uncontrollable() const { return difference(events_, controllable_); }
  EventSet unobservable() const { return difference(events_, observable_); }

  bool contains(const EventId& e) const { return events_.count(e) != 0; }
  bool is_controllable(const EventId& e) const { return controllable_.count(e) != 0; }
  bool is_observable(const EventId& e) const { return observable_.count(e) != 0; }

  void require_events(const EventString& s) const {
    for (const auto& e : s.events()) {
      if (!contains(e)) {
        throw Error(ErrorCode::UnknownEvent,
                    "event '" + e.name() + "' in '" + s.to_string() + "' is not in the alphabet");
      }
    }
  }

  Alphabet with_sites(SitePair sites) const {
    return Alphabet(events_, controllable_, observable_, std::move(sites));
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  static EventSet difference(const EventSet& a, const EventSet& b) {
    EventSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }

  void require_subset(const EventSet& subset, const std::string& what) const {
    for (const auto& e : subset) {
      if (!contains(e)) {
        throw Error(ErrorCode::UnknownEvent, what + " event '" + e.name() + "' is not in the alphabet");
      }
    }
  }

  static void require_within(const EventSet& subset, const EventSet& parent, const std::string& what,
                             const std::string& parent_name) {
    for (const auto& e : subset) {
      if (!parent.count(e)) {
        throw Error(ErrorCode::InvalidAlphabet,
                    what + " event '" + e.name() + "' is not in the global " + parent_name + " set");
      }
    }
  }

  EventSet events_;
  EventSet controllable_;
  EventSet observable_;
  std::optional<SitePair> sites_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(EventSet events, EventSet controllable, EventSet observable,
                                 std::optional<SitePair> sites = std::nullopt) {
  return std::make_shared<const Alphabet>(std::move(events), std::move(controllable),
                                          std::move(observable), std::move(sites));
}

/// Convenience for tests and fixtures: builds an EventSet from names.
inline EventSet event_set(std::initializer_list<std::string_view> names) {
  EventSet out;
  for (auto n : names) out.emplace(std::string(n));
  return out;
}

}  // namespace fdes
