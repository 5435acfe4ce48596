#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "supred/error.hpp"
#include "supred/reduction.hpp"

namespace supred {

SuperConstruction build_super_detailed(const Automaton& g, const Automaton& s) {
    require_feasible(g, s, "supervisor");
    Automaton loop = sync_product(g, s);
    SubsetResult subsets = subset_construction_detailed(loop);
    subsets.automaton.set_name("SUPER(" + s.name() + ")");
    return {std::move(loop), std::move(subsets)};
}

Automaton build_super(const Automaton& g, const Automaton& s) {
    return std::move(build_super_detailed(g, s).subsets.automaton);
}

std::pair<EventSet, EventSet> characterize_super_state(const Automaton& g, const Automaton& s,
                                                       const Automaton& super, StateId z) {
    require_feasible(g, s, "supervisor");
    auto detailed = sync_product_detailed(g, s);
    auto subsets = subset_construction_detailed(detailed.automaton);
    const auto& built = subsets.automaton;
    if (built.num_states() != super.num_states())
        throw PreconditionError("'" + super.name() + "' is not the subset construction of " + g.name() +
                                "||" + s.name());
    if (z >= super.num_states())
        throw PreconditionError("state " + std::to_string(z) + " is not a state of '" + super.name() + "'");
    if (built.state_name(z) != super.state_name(z))
        throw PreconditionError("state '" + super.state_name(z) + "' does not match the subset construction");

    // Members of one subset share their S component, so En and D never clash.
    EventSet enabled(g.num_events());
    EventSet disabled(g.num_events());
    for (StateId member : subsets.members[z]) {
        enabled |= detailed.automaton.enabled(member);
        auto [x, zs] = detailed.pairs[member];
        for (EventId e = 0; e < g.num_events(); ++e)
            if (g.defined(x, e) && !s.defined(zs, e)) disabled.insert(e);
    }
    return {enabled, disabled};
}

ExtractedCover extract_cover_from_simsup(const Automaton& super, const Automaton& simsup,
                                         const Automaton& g, const Automaton& s) {
    require_same_alphabet(g, super, "cover extraction");
    require_feasible(g, simsup, "SIMSUP");
    if (auto eq = control_equivalent(g, s, simsup); !eq.equal)
        throw PreconditionError("'" + simsup.name() + "' is not control equivalent to '" + s.name() +
                                "' (witness: " + format_word(g.alphabet(), *eq.counterexample) + ")");
    if (auto nr = is_normal(g, s, simsup); !nr.holds)
        throw PreconditionError("'" + simsup.name() + "' is not normal with respect to '" + s.name() + "'");

    const std::size_t m = g.num_events();
    std::vector<std::uint8_t> in_cell(std::size_t{simsup.num_states()} * super.num_states(), 0);

    using Quad = std::tuple<StateId, StateId, StateId, StateId>;  // (x, z, super, simsup)
    std::map<Quad, bool> seen;
    std::deque<Quad> queue;
    Quad start{g.initial(), s.initial(), super.initial(), simsup.initial()};
    seen.emplace(start, true);
    queue.push_back(start);
    while (!queue.empty()) {
        auto [x, z, w, y] = queue.front();
        queue.pop_front();
        in_cell[std::size_t{y} * super.num_states() + w] = 1;
        for (EventId e = 0; e < m; ++e) {
            auto tx = g.next(x, e);
            auto tz = s.next(z, e);
            if (!tx || !tz) continue;
            auto tw = super.next(w, e);
            auto ty = simsup.next(y, e);
            if (!tw || !ty)
                throw PreconditionError("'" + super.name() + "' or '" + simsup.name() +
                                        "' blocks a string of the closed loop");
            Quad nxt{*tx, *tz, *tw, *ty};
            if (seen.emplace(nxt, true).second) queue.push_back(nxt);
        }
    }

    std::vector<std::vector<StateId>> cells(simsup.num_states());
    for (StateId y = 0; y < simsup.num_states(); ++y) {
        for (StateId w = 0; w < super.num_states(); ++w)
            if (in_cell[std::size_t{y} * super.num_states() + w]) cells[y].push_back(w);
        if (cells[y].empty())
            throw PreconditionError("state '" + simsup.state_name(y) + "' of '" + simsup.name() +
                                    "' is not reached by the closed loop");
    }

    // Cover keeps cells in canonical order; record where each y lands.
    std::vector<StateId> order(simsup.num_states());
    std::iota(order.begin(), order.end(), StateId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](StateId a, StateId b) { return cells[a] < cells[b]; });
    std::vector<std::size_t> cell_of(simsup.num_states());
    for (std::size_t i = 0; i < order.size(); ++i) cell_of[order[i]] = i;

    QuotientChoice choice;
    choice.num_events = m;
    choice.initial_cell = cell_of[simsup.initial()];
    choice.target.assign(simsup.num_states() * m, std::nullopt);
    choice.alternatives.assign(simsup.num_states() * m, false);
    for (const auto& t : simsup.transitions())
        choice.target[cell_of[t.source] * m + t.event] = cell_of[t.target];

    return {Cover(std::move(cells)), std::move(cell_of), std::move(choice)};
}

}  // namespace supred
