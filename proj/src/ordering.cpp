#include "supred/ordering.hpp"

#include <map>
#include <tuple>

#include "supred/error.hpp"

namespace supred {

std::string to_string(Clause clause) {
    switch (clause) {
        case Clause::Enabled: return "enabled";
        case Clause::Disabled: return "disabled";
        case Clause::MarkedS: return "markedS";
        case Clause::MarkedG: return "markedG";
    }
    return "unknown";
}

namespace {

void require_equivalent(const Automaton& g, const Automaton& s, const Automaton& other,
                        const std::string& role) {
    if (auto eq = control_equivalent(g, s, other); !eq.equal)
        throw PreconditionError(role + " '" + other.name() + "' is not control equivalent to '" + s.name() +
                                "' (witness: " + format_word(g.alphabet(), *eq.counterexample) + ")");
}

std::vector<Clause> violations(const StateControl& a, const StateControl& b) {
    std::vector<Clause> out;
    if (!a.enabled.subset_of(b.enabled)) out.push_back(Clause::Enabled);
    if (!a.disabled.subset_of(b.disabled)) out.push_back(Clause::Disabled);
    if (a.marked_s && !b.marked_s) out.push_back(Clause::MarkedS);
    if (a.marked_g && !b.marked_g) out.push_back(Clause::MarkedG);
    return out;
}

}  // namespace

OrderWitness finer_than(const Automaton& g, const Automaton& s, const Automaton& s1, const Automaton& s2) {
    require_same_alphabet(g, s, "fineness order");
    require_same_alphabet(g, s1, "fineness order");
    require_same_alphabet(g, s2, "fineness order");
    require_equivalent(g, s, s1, "s1");
    require_equivalent(g, s, s2, "s2");

    const auto d1 = control_data(g, s1);
    const auto d2 = control_data(g, s2);
    const std::size_t m = g.num_events();

    struct Node {
        StateId x, z, z1, z2;
        std::size_t parent;
        EventId via;
    };
    std::vector<Node> nodes{{g.initial(), s.initial(), s1.initial(), s2.initial(), 0, 0}};
    std::map<std::tuple<StateId, StateId, StateId, StateId>, bool> seen;
    seen.emplace(std::tuple{g.initial(), s.initial(), s1.initial(), s2.initial()}, true);

    // Breadth-first in event order, so the first violation has the shortlex-least string.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node node = nodes[i];
        if (auto bad = violations(d1[node.z1], d2[node.z2]); !bad.empty()) {
            Word w;
            for (std::size_t k = i; k != 0; k = nodes[k].parent) w.push_back(nodes[k].via);
            OrderWitness out;
            out.holds = false;
            out.word = Word(w.rbegin(), w.rend());
            out.clause = bad.front();
            out.violated = std::move(bad);
            out.states = std::pair{node.z1, node.z2};
            return out;
        }
        for (EventId e = 0; e < m; ++e) {
            auto tx = g.next(node.x, e);
            auto tz = s.next(node.z, e);
            if (!tx || !tz) continue;
            // Control equivalence guarantees both supervisors follow the loop.
            StateId t1 = *s1.next(node.z1, e);
            StateId t2 = *s2.next(node.z2, e);
            if (seen.emplace(std::tuple{*tx, *tz, t1, t2}, true).second)
                nodes.push_back({*tx, *tz, t1, t2, i, e});
        }
    }
    return {};
}

OrderWitness verify_theorem3(const Automaton& g, const Automaton& s, const Automaton& s_prime) {
    return finer_than(g, s, build_super(g, s), s_prime);
}

SizeComparison compare_reductions(const Automaton& g, const Automaton& s, const Automaton& s1,
                                  const Automaton& s2, std::size_t cap) {
    require_feasible(g, s1, "s1");
    require_feasible(g, s2, "s2");
    require_equivalent(g, s, s1, "s1");
    require_equivalent(g, s, s2, "s2");
    if (!is_normal(g, s, s1).holds)
        throw PreconditionError("s1 '" + s1.name() + "' is not normal with respect to '" + s.name() + "'");
    if (!is_normal(g, s, s2).holds)
        throw PreconditionError("s2 '" + s2.name() + "' is not normal with respect to '" + s.name() + "'");
    if (auto order = finer_than(g, s, s1, s2); !order.holds)
        throw PreconditionError("s1 is not finer than s2: clause " + to_string(*order.clause) +
                                " fails after " + format_word(g.alphabet(), *order.word));

    SizeComparison out;
    out.size1 = reduce_exact_minimum(g, s1, CoverMode::Cover, cap).report.output_size;
    out.size2 = reduce_exact_minimum(g, s2, CoverMode::Cover, cap).report.output_size;
    out.ordered = out.size1 <= out.size2;
    return out;
}

SizeComparison compare_full_vs_partial(const Automaton& g, const Automaton& s_full,
                                       const Automaton& s_partial, std::size_t cap) {
    require_same_alphabet(g, s_partial, "full versus partial comparison");
    const Alphabet full = g.alphabet().with_full_observation();
    if (!(s_full.alphabet().with_full_observation() == full))
        throw PreconditionError("'" + s_full.name() + "' and '" + g.name() + "' differ in events");
    const Automaton g_full = with_alphabet(g, full);
    const Automaton sf = with_alphabet(s_full, full);

    if (!is_des_isomorphic(sf, sync_product(g_full, sf)).holds)
        throw PreconditionError("hypothesis failed: '" + s_full.name() + "' is not isomorphic to " +
                                g.name() + "||" + s_full.name());
    require_feasible(g, s_partial, "partial-observation supervisor");
    if (!is_des_isomorphic(s_partial, subset_construction(sync_product(g, s_partial))).holds)
        throw PreconditionError("hypothesis failed: '" + s_partial.name() +
                                "' is not isomorphic to the subset construction of " + g.name() + "||" +
                                s_partial.name());
    if (auto eq = control_equivalent(g_full, sf, with_alphabet(s_partial, full)); !eq.equal)
        throw PreconditionError("hypothesis failed: '" + s_full.name() + "' and '" + s_partial.name() +
                                "' are not control equivalent (witness: " +
                                format_word(full, *eq.counterexample) + ")");

    SizeComparison out;
    out.size1 = reduce_exact_minimum(g_full, sf, CoverMode::Cover, cap).report.output_size;
    out.size2 = reduce_exact_minimum(g, s_partial, CoverMode::Cover, cap).report.output_size;
    out.ordered = out.size1 <= out.size2;
    return out;
}

}  // namespace supred
