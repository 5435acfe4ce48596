#pragma once

#include <set>
#include <utility>
#include <vector>

#include "supred/automaton.hpp"
#include "supred/supervision.hpp"

// Brute-force reference implementations used only by tests. They work from
// the definitions (strings, explicit enumeration) rather than from the
// library's product and subset machinery.
namespace supred::oracle {

struct Languages {
    std::set<Word> closed;
    std::set<Word> marked;
};

/// Every word of length at most `max_len` accepted (closed) or marked by `a`.
Languages enumerate(const Automaton& a, std::size_t max_len);

/// Runs every string of L(G||S) up to length |G|·|S| through both automata.
struct Control {
    EventSet enabled;
    EventSet disabled;
    bool marked_s = false;
    bool marked_g = false;
    bool reached = false;
};
std::vector<Control> control_data(const Automaton& g, const Automaton& s);

/// En and D of a SUPER state from strings: over every t in L(G||S) that drives
/// `super` to `z` (bounded by |super|·|G|·|S| symbols), collect the events that
/// extend t in L(G||S) and those possible in G but cut by S.
std::pair<EventSet, EventSet> proposition1(const Automaton& g, const Automaton& s, const Automaton& super,
                                           StateId z);

/// Definition 1 checked literally on explicit cells.
bool is_control_cover(const Automaton& s, const ControlData& data, const std::vector<std::vector<StateId>>& cells);

/// Smallest valid partition, by enumerating set partitions (small n only).
std::size_t min_partition_size(const Automaton& s, const ControlData& data);

/// Smallest valid cover, by enumerating families of compatible cells (small n only).
std::size_t min_cover_size(const Automaton& s, const ControlData& data);

}  // namespace supred::oracle
