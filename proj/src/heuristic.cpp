#include <algorithm>
#include <limits>
#include <random>

#include "congruence.hpp"

namespace supred {
namespace detail {

namespace {

constexpr StateId kNoTarget = std::numeric_limits<StateId>::max();

// Union-find over supervisor states. Every class keeps its members and, per
// event, one member's target; closure merges the classes of those targets.
struct Partition {
    std::vector<StateId> parent;
    std::vector<std::vector<StateId>> members;
    std::vector<StateId> target;

    StateId find(StateId v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
};

bool merge_with_closure(Partition& p, const CompatibilityRelation& rel, std::size_t m,
                        StateId a, StateId b, std::uint64_t& steps) {
    std::vector<std::pair<StateId, StateId>> work{{a, b}};
    while (!work.empty()) {
        auto [u, v] = work.back();
        work.pop_back();
        StateId ru = p.find(u);
        StateId rv = p.find(v);
        ++steps;
        if (ru == rv) continue;
        for (StateId x : p.members[ru])
            for (StateId y : p.members[rv]) {
                ++steps;
                if (!rel(x, y)) return false;
            }
        if (p.members[ru].size() < p.members[rv].size()) std::swap(ru, rv);
        p.parent[rv] = ru;
        p.members[ru].insert(p.members[ru].end(), p.members[rv].begin(), p.members[rv].end());
        p.members[rv].clear();
        for (std::size_t e = 0; e < m; ++e) {
            StateId tu = p.target[ru * m + e];
            StateId tv = p.target[rv * m + e];
            if (tu != kNoTarget && tv != kNoTarget)
                work.emplace_back(tu, tv);
            else if (tu == kNoTarget)
                p.target[ru * m + e] = tv;
        }
    }
    return true;
}

}  // namespace

std::vector<std::pair<StateId, StateId>> all_pairs(std::size_t n) {
    std::vector<std::pair<StateId, StateId>> out;
    for (StateId i = 0; i < n; ++i)
        for (StateId j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

CongruenceResult control_congruence(const Automaton& s, const CompatibilityRelation& rel,
                                    const std::vector<std::pair<StateId, StateId>>& attempts) {
    const std::size_t n = s.num_states();
    const std::size_t m = s.num_events();
    Partition p;
    p.parent.resize(n);
    p.members.resize(n);
    p.target.assign(n * m, kNoTarget);
    for (StateId z = 0; z < n; ++z) {
        p.parent[z] = z;
        p.members[z] = {z};
        for (EventId e = 0; e < m; ++e)
            if (auto t = s.next(z, e)) p.target[z * m + e] = *t;
    }

    std::uint64_t steps = 0;
    for (auto [i, j] : attempts) {
        ++steps;
        if (p.find(i) == p.find(j)) continue;
        Partition scratch = p;
        if (merge_with_closure(scratch, rel, m, i, j, steps)) p = std::move(scratch);
    }

    std::vector<std::vector<StateId>> cells;
    for (StateId z = 0; z < n; ++z)
        if (p.parent[z] == z) cells.push_back(p.members[z]);
    return {Cover(std::move(cells)), steps};
}

}  // namespace detail

Reduction reduce_heuristic(const Automaton& g, const Automaton& s) {
    require_feasible(g, s, "supervisor");
    const auto data = control_data(g, s);
    auto result = detail::control_congruence(s, compatibility_relation(data), detail::all_pairs(s.num_states()));
    auto quotient = induce_quotient(s, data, result.partition);
    ReductionReport report{s.num_states(), result.partition.size(), std::move(result.partition),
                           result.steps, ReductionMode::Heuristic};
    return {std::move(quotient.automaton), std::move(report)};
}

Reduction random_reduction(const Automaton& g, const Automaton& s, std::uint64_t seed) {
    const Automaton super = build_super(g, s);
    const auto data = control_data(g, super);
    std::mt19937_64 rng(seed);
    auto attempts = detail::all_pairs(super.num_states());
    std::shuffle(attempts.begin(), attempts.end(), rng);
    // A random prefix keeps some runs fine and others coarse.
    std::uniform_int_distribution<std::size_t> length(0, attempts.size());
    attempts.resize(length(rng));

    auto result = detail::control_congruence(super, compatibility_relation(data), attempts);
    auto quotient = induce_quotient(super, data, result.partition);
    quotient.automaton.set_name("random(" + s.name() + ")");
    ReductionReport report{super.num_states(), result.partition.size(), std::move(result.partition),
                           result.steps, ReductionMode::Random};
    return {std::move(quotient.automaton), std::move(report)};
}

Automaton generate_equivalent_supervisor(const Automaton& g, const Automaton& s, std::uint64_t seed) {
    return std::move(random_reduction(g, s, seed).supervisor);
}

}  // namespace supred
