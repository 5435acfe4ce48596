#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supred/automaton.hpp"
#include "supred/reduction.hpp"

namespace supred {

/// The four clauses of the fineness order, in definition order.
enum class Clause { Enabled, Disabled, MarkedS, MarkedG };

std::string to_string(Clause clause);

struct OrderWitness {
    bool holds = true;
    std::optional<Word> word;                            ///< shortest offending closed-loop string
    std::optional<Clause> clause;                        ///< first violated clause at that string
    std::vector<Clause> violated;                        ///< every clause violated there
    std::optional<std::pair<StateId, StateId>> states;   ///< (z1, z2) reached by `word`
};

/// Decides s1 ⪯ s2: along every string of L(G||S) the state of s1 enables and
/// disables no more than the state of s2, and its M and T flags imply those of
/// s2. Throws PreconditionError if s1 or s2 is not control equivalent to s.
OrderWitness finer_than(const Automaton& g, const Automaton& s, const Automaton& s1, const Automaton& s2);

/// SUPER ⪯ s_prime. A false verdict indicates a bug, not a property of the input.
OrderWitness verify_theorem3(const Automaton& g, const Automaton& s, const Automaton& s_prime);

struct SizeComparison {
    std::size_t size1 = 0;
    std::size_t size2 = 0;
    bool ordered = false;  ///< size1 <= size2
};

/// Minimum cover sizes (cover mode) of s1 and s2 after checking feasibility,
/// control equivalence to s, normality and s1 ⪯ s2. Each failed precondition
/// raises PreconditionError naming it.
SizeComparison compare_reductions(const Automaton& g, const Automaton& s, const Automaton& s1,
                                  const Automaton& s2, std::size_t cap = kDefaultExactCap);

/// Minimum cover sizes of a full-observation supervisor and a partial-observation
/// one. Checks that s_full is isomorphic to G||s_full read under full
/// observation, that s_partial is isomorphic to the subset construction of
/// G||s_partial, and that the two are control equivalent. s_full is reduced
/// under full observation. Throws PreconditionError naming a failed hypothesis.
SizeComparison compare_full_vs_partial(const Automaton& g, const Automaton& s_full,
                                       const Automaton& s_partial, std::size_t cap = kDefaultExactCap);

}  // namespace supred
