#pragma once

#include <utility>
#include <vector>

#include "supred/automaton.hpp"

namespace supred {

struct ProductResult {
    Automaton automaton;
    /// Component states of each product state, indexed by product state id.
    std::vector<std::pair<StateId, StateId>> pairs;
};

/// Reachable synchronous product over a shared alphabet: a transition exists
/// iff both operands define it; marked iff both components are marked. States
/// appear in breadth-first discovery order. Throws PreconditionError on
/// alphabet mismatch.
ProductResult sync_product_detailed(const Automaton& a, const Automaton& b);
Automaton sync_product(const Automaton& a, const Automaton& b);

/// Restriction to states reachable from the initial state. Relative state
/// order is preserved, so a reachable automaton is returned unchanged.
Automaton trim_reachable(const Automaton& a);
bool is_reachable(const Automaton& a);

/// Natural projection onto the observable events of `alphabet`.
/// Throws PreconditionError for event ids outside the alphabet.
Word project(const Word& word, const Alphabet& alphabet);

struct SubsetResult {
    Automaton automaton;
    /// Sorted member states of the input for each subset state.
    std::vector<std::vector<StateId>> members;
};

/// Subset construction with respect to the observable events. Each subset is
/// closed under unobservable moves; every unobservable event that some member
/// can execute is reinserted as a selfloop. A subset is marked iff it holds a
/// marked member. Subset names are the sorted member names joined by `+`.
SubsetResult subset_construction_detailed(const Automaton& a);
Automaton subset_construction(const Automaton& a);

/// Same states, marking and transitions over another alphabet with the same
/// event names in the same order (attributes may differ). Throws
/// PreconditionError otherwise.
Automaton with_alphabet(const Automaton& a, const Alphabet& alphabet);

/// Appends `~k` to later occurrences of a repeated name.
std::vector<std::string> make_unique_names(std::vector<std::string> names);

}  // namespace supred
