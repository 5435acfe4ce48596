#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "supred/event_set.hpp"

namespace supred {

struct Event {
    std::string name;
    bool controllable = true;
    bool observable = true;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Ordered event list with controllability and observability attributes.
/// Event ids are positions in this list; "alphabet order" means id order.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws PreconditionError on empty, whitespace-containing or duplicate names.
    explicit Alphabet(std::vector<Event> events);

    std::size_t size() const noexcept { return events_.size(); }
    const Event& operator[](EventId e) const { return events_[e]; }
    const std::vector<Event>& events() const noexcept { return events_; }

    std::optional<EventId> find(std::string_view name) const;
    /// Like find(), but throws PreconditionError for unknown names.
    EventId id(std::string_view name) const;

    bool controllable(EventId e) const { return events_[e].controllable; }
    bool observable(EventId e) const { return events_[e].observable; }

    EventSet empty_set() const { return EventSet(size()); }
    EventSet uncontrollable_events() const;
    EventSet unobservable_events() const;

    /// Same names and attributes, every event observable.
    Alphabet with_full_observation() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.events_ == b.events_; }

private:
    std::vector<Event> events_;
    std::unordered_map<std::string, EventId> index_;
};

using Word = std::vector<EventId>;

/// Space-separated event names; the empty word prints as "ε".
std::string format_word(const Alphabet& alphabet, const Word& word);
/// Comma-separated names in braces, alphabet order: `{a,b}`.
std::string format_events(const Alphabet& alphabet, const EventSet& set);

}  // namespace supred
