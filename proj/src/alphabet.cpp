#include "supred/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "supred/error.hpp"

namespace supred {

namespace {

bool valid_token(std::string_view s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(),
                        [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Alphabet::Alphabet(std::vector<Event> events) : events_(std::move(events)) {
    for (EventId e = 0; e < events_.size(); ++e) {
        const auto& name = events_[e].name;
        if (!valid_token(name))
            throw PreconditionError("invalid event name '" + name + "'");
        if (!index_.emplace(name, e).second)
            throw PreconditionError("duplicate event name '" + name + "'");
    }
}

std::optional<EventId> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EventId Alphabet::id(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw PreconditionError("unknown event '" + std::string(name) + "'");
}

EventSet Alphabet::uncontrollable_events() const {
    EventSet out(size());
    for (EventId e = 0; e < size(); ++e)
        if (!events_[e].controllable) out.insert(e);
    return out;
}

EventSet Alphabet::unobservable_events() const {
    EventSet out(size());
    for (EventId e = 0; e < size(); ++e)
        if (!events_[e].observable) out.insert(e);
    return out;
}

Alphabet Alphabet::with_full_observation() const {
    auto events = events_;
    for (auto& ev : events) ev.observable = true;
    return Alphabet(std::move(events));
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    if (word.empty()) return "ε";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out += ' ';
        out += alphabet[word[i]].name;
    }
    return out;
}

std::string format_events(const Alphabet& alphabet, const EventSet& set) {
    std::string out = "{";
    bool first = true;
    for (EventId e : set.members()) {
        if (!first) out += ',';
        out += alphabet[e].name;
        first = false;
    }
    return out + "}";
}

}  // namespace supred
