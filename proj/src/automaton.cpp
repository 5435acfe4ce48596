#include "supred/automaton.hpp"

#include <algorithm>
#include <cctype>

#include "supred/error.hpp"

namespace supred {

Automaton::Automaton(Alphabet alphabet, std::string name)
    : alphabet_(std::move(alphabet)), name_(std::move(name)) {}

StateId Automaton::add_state(std::string name, bool marked) {
    if (name.empty() || std::any_of(name.begin(), name.end(),
                                    [](unsigned char c) { return std::isspace(c) != 0; }))
        throw PreconditionError("invalid state name '" + name + "'");
    auto id = static_cast<StateId>(names_.size());
    if (!by_name_.emplace(name, id).second)
        throw PreconditionError("duplicate state name '" + name + "'");
    names_.push_back(std::move(name));
    marked_.push_back(marked);
    delta_.resize(delta_.size() + alphabet_.size(), kNone);
    return id;
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

void Automaton::set_initial(StateId s) {
    if (s >= num_states()) throw PreconditionError("initial state out of range");
    initial_ = s;
}

std::vector<StateId> Automaton::marked_states() const {
    std::vector<StateId> out;
    for (StateId s = 0; s < num_states(); ++s)
        if (marked_[s]) out.push_back(s);
    return out;
}

void Automaton::add_transition(StateId source, EventId event, StateId target) {
    if (source >= num_states() || target >= num_states() || event >= num_events())
        throw PreconditionError("transition endpoint out of range");
    StateId& slot = delta_[index(source, event)];
    if (slot != kNone && slot != target)
        throw NondeterminismError("nondeterministic transition: state '" + names_[source] +
                                  "' has two targets on event '" + alphabet_[event].name + "'");
    slot = target;
}

void Automaton::remove_transition(StateId source, EventId event) {
    delta_[index(source, event)] = kNone;
}

std::optional<StateId> Automaton::run(StateId from, const Word& word) const {
    StateId s = from;
    for (EventId e : word) {
        auto t = next(s, e);
        if (!t) return std::nullopt;
        s = *t;
    }
    return s;
}

EventSet Automaton::enabled(StateId s) const {
    EventSet out(num_events());
    for (EventId e = 0; e < num_events(); ++e)
        if (defined(s, e)) out.insert(e);
    return out;
}

std::vector<Transition> Automaton::transitions() const {
    std::vector<Transition> out;
    for (StateId s = 0; s < num_states(); ++s)
        for (EventId e = 0; e < num_events(); ++e)
            if (auto t = next(s, e)) out.push_back({s, e, *t});
    return out;
}

std::size_t Automaton::num_transitions() const {
    return static_cast<std::size_t>(
        std::count_if(delta_.begin(), delta_.end(), [](StateId t) { return t != kNone; }));
}

void require_same_alphabet(const Automaton& a, const Automaton& b, std::string_view what) {
    if (!(a.alphabet() == b.alphabet()))
        throw PreconditionError("alphabet mismatch in " + std::string(what) + ": '" + a.name() +
                                "' and '" + b.name() + "' have different event sections");
}

}  // namespace supred
