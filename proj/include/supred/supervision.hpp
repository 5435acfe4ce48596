#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supred/automaton.hpp"
#include "supred/compare.hpp"

namespace supred {

/// Control information carried by one supervisor state.
struct StateControl {
    EventSet enabled;       ///< events with a transition at the state
    EventSet disabled;      ///< plant-possible events the state does not enable
    bool marked_s = false;  ///< reached by a string of Lm(G||S)
    bool marked_g = false;  ///< reached by a string of Lm(G)
    bool reached = false;   ///< visited by the closed loop at all
};

/// Per-state control data of a supervisor with respect to a plant.
class ControlData {
public:
    ControlData() = default;
    ControlData(Alphabet alphabet, std::vector<StateControl> states)
        : alphabet_(std::move(alphabet)), states_(std::move(states)) {}

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return states_.size(); }
    /// Throws PreconditionError for an unknown state.
    const StateControl& at(StateId z) const;
    const StateControl& operator[](StateId z) const { return states_[z]; }

private:
    Alphabet alphabet_;
    std::vector<StateControl> states_;
};

/// Computes enabled/disabled sets and the two marking indicators of every
/// state of `s` by walking the reachable part of g||s. States the closed loop
/// never visits get empty disabled sets, false indicators and `reached=false`.
ControlData control_data(const Automaton& g, const Automaton& s);

/// One line per state: `z: En={..} D={..} M=.. T=..`, alphabet-ordered.
std::string format_control_table(const Automaton& s, const ControlData& data);

/// No enable/disable conflict in either direction, and equal S-marking
/// whenever the G-marking indicators agree.
bool compatible(const ControlData& data, StateId z, StateId z2);

/// Reflexive, symmetric, not necessarily transitive.
class CompatibilityRelation {
public:
    explicit CompatibilityRelation(std::size_t n) : n_(n), bits_(n * n, false) {}

    std::size_t size() const noexcept { return n_; }
    bool operator()(StateId a, StateId b) const { return bits_[std::size_t{a} * n_ + b]; }
    void set(StateId a, StateId b, bool v) {
        bits_[std::size_t{a} * n_ + b] = v;
        bits_[std::size_t{b} * n_ + a] = v;
    }

private:
    std::size_t n_;
    std::vector<bool> bits_;
};

CompatibilityRelation compatibility_relation(const ControlData& data);

struct ExistenceResult {
    bool holds = true;
    std::optional<StateId> state;
    std::optional<EventId> event;
};

/// Strict control-pattern check: every state enables every uncontrollable event.
ExistenceResult check_control_existence(const Automaton& s);

/// Plant-relative check: no uncontrollable event that the plant can execute in
/// the closed loop is disabled, i.e. D(z) holds only controllable events.
ExistenceResult check_control_existence(const Automaton& g, const Automaton& s);

struct FeasibilityResult {
    bool holds = true;
    std::optional<Transition> transition;
};

/// Every unobservable transition must be a selfloop.
FeasibilityResult check_control_feasibility(const Automaton& s);

/// Throws PreconditionError unless `s` passes the plant-relative existence
/// check and the feasibility check. `role` names the argument in the message.
void require_feasible(const Automaton& g, const Automaton& s, const std::string& role);

/// L(G||S1) = L(G||S2) and Lm(G||S1) = Lm(G||S2).
LanguageComparison control_equivalent(const Automaton& g, const Automaton& s1, const Automaton& s2);

struct NormalityResult {
    bool holds = true;
    std::optional<Transition> unexercised;
    std::optional<StateId> unreached_marked;
};

/// Every transition of `candidate` is exercised by L(G||S) and every marked
/// state of `candidate` is reached by Lm(G||S).
NormalityResult is_normal(const Automaton& g, const Automaton& s, const Automaton& candidate);

}  // namespace supred
