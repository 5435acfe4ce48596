#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "supred/alphabet.hpp"

namespace supred {

using StateId = std::uint32_t;

struct Transition {
    StateId source;
    EventId event;
    StateId target;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic finite automaton with a partial transition map.
///
/// States are identified by dense ids in insertion order; the initial state
/// defaults to the first state added. The transition table is stored densely
/// (states x events), which suits the small and medium automata this library
/// deals with.
class Automaton {
public:
    Automaton() = default;
    explicit Automaton(Alphabet alphabet, std::string name = "A");

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return names_.size(); }
    std::size_t num_events() const noexcept { return alphabet_.size(); }

    /// Throws PreconditionError if the name is empty, has whitespace or is taken.
    StateId add_state(std::string name, bool marked = false);
    const std::string& state_name(StateId s) const { return names_[s]; }
    std::optional<StateId> find_state(std::string_view name) const;

    StateId initial() const noexcept { return initial_; }
    void set_initial(StateId s);

    bool is_marked(StateId s) const { return marked_[s]; }
    void set_marked(StateId s, bool marked = true) { marked_[s] = marked; }
    std::vector<StateId> marked_states() const;

    /// Throws NondeterminismError if (source, event) already has another target.
    void add_transition(StateId source, EventId event, StateId target);
    void remove_transition(StateId source, EventId event);
    std::optional<StateId> next(StateId s, EventId e) const {
        StateId t = delta_[index(s, e)];
        if (t == kNone) return std::nullopt;
        return t;
    }
    bool defined(StateId s, EventId e) const { return delta_[index(s, e)] != kNone; }

    /// Follows a word from `from`; nullopt if some step is undefined.
    std::optional<StateId> run(StateId from, const Word& word) const;

    EventSet enabled(StateId s) const;
    /// All transitions ordered by source state, then event id.
    std::vector<Transition> transitions() const;
    std::size_t num_transitions() const;

private:
    static constexpr StateId kNone = std::numeric_limits<StateId>::max();

    std::size_t index(StateId s, EventId e) const { return std::size_t{s} * alphabet_.size() + e; }

    Alphabet alphabet_;
    std::string name_ = "A";
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> by_name_;
    std::vector<bool> marked_;
    std::vector<StateId> delta_;
    StateId initial_ = 0;
};

/// Throws PreconditionError naming `what` if the alphabets differ in any way.
void require_same_alphabet(const Automaton& a, const Automaton& b, std::string_view what);

}  // namespace supred
