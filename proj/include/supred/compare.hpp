#pragma once

#include <optional>
#include <vector>

#include "supred/automaton.hpp"

namespace supred {

struct MorphismResult {
    bool holds = false;
    /// Image of each state of the first automaton when `holds`.
    std::optional<std::vector<StateId>> mapping;
};

/// DES-epimorphism from `a` onto `b`: surjective, initial to initial, marked
/// set onto marked set, transitions preserved, and every transition of `b` is
/// reflected by some preimage. For deterministic reachable automata the map is
/// forced by following transitions from the initial states.
/// Throws PreconditionError on alphabet mismatch.
MorphismResult is_des_epimorphic(const Automaton& a, const Automaton& b);
/// Epimorphism whose map is a bijection.
MorphismResult is_des_isomorphic(const Automaton& a, const Automaton& b);

struct LanguageComparison {
    bool equal = false;
    /// Shortest distinguishing word (ties broken by alphabet order) when unequal.
    std::optional<Word> counterexample;
};

/// Decides L(a) = L(b) and Lm(a) = Lm(b) by a synchronized breadth-first walk.
LanguageComparison language_equivalent(const Automaton& a, const Automaton& b);

}  // namespace supred
