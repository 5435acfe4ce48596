#include "supred/supervision.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <tuple>

#include "supred/construct.hpp"
#include "supred/error.hpp"

namespace supred {

const StateControl& ControlData::at(StateId z) const {
    if (z >= states_.size())
        throw PreconditionError("state " + std::to_string(z) + " is not covered by the control data");
    return states_[z];
}

ControlData control_data(const Automaton& g, const Automaton& s) {
    require_same_alphabet(g, s, "control data");
    std::vector<StateControl> states(s.num_states());
    for (StateId z = 0; z < s.num_states(); ++z) {
        states[z].enabled = s.enabled(z);
        states[z].disabled = EventSet(s.num_events());
    }

    auto product = sync_product_detailed(g, s);
    for (auto [x, z] : product.pairs) {
        auto& sc = states[z];
        sc.reached = true;
        for (EventId e = 0; e < g.num_events(); ++e)
            if (g.defined(x, e) && !s.defined(z, e)) sc.disabled.insert(e);
        if (g.is_marked(x)) {
            sc.marked_g = true;
            if (s.is_marked(z)) sc.marked_s = true;
        }
    }
    return ControlData(s.alphabet(), std::move(states));
}

std::string format_control_table(const Automaton& s, const ControlData& data) {
    std::ostringstream out;
    for (StateId z = 0; z < s.num_states(); ++z) {
        const auto& sc = data.at(z);
        out << s.state_name(z) << ": En=" << format_events(s.alphabet(), sc.enabled)
            << " D=" << format_events(s.alphabet(), sc.disabled)
            << " M=" << (sc.marked_s ? "true" : "false") << " T=" << (sc.marked_g ? "true" : "false");
        if (!sc.reached) out << " (unreached)";
        out << '\n';
    }
    return out.str();
}

bool compatible(const ControlData& data, StateId z, StateId z2) {
    const auto& a = data.at(z);
    const auto& b = data.at(z2);
    if (a.enabled.intersects(b.disabled) || b.enabled.intersects(a.disabled)) return false;
    if (a.marked_g == b.marked_g && a.marked_s != b.marked_s) return false;
    return true;
}

CompatibilityRelation compatibility_relation(const ControlData& data) {
    CompatibilityRelation rel(data.size());
    for (StateId a = 0; a < data.size(); ++a)
        for (StateId b = a; b < data.size(); ++b) rel.set(a, b, compatible(data, a, b));
    return rel;
}

ExistenceResult check_control_existence(const Automaton& s) {
    const auto uncontrollable = s.alphabet().uncontrollable_events();
    for (StateId z = 0; z < s.num_states(); ++z)
        for (EventId e : uncontrollable.members())
            if (!s.defined(z, e)) return {false, z, e};
    return {};
}

ExistenceResult check_control_existence(const Automaton& g, const Automaton& s) {
    const auto data = control_data(g, s);
    for (StateId z = 0; z < s.num_states(); ++z)
        for (EventId e : data[z].disabled.members())
            if (!s.alphabet().controllable(e)) return {false, z, e};
    return {};
}

FeasibilityResult check_control_feasibility(const Automaton& s) {
    for (const auto& t : s.transitions())
        if (!s.alphabet().observable(t.event) && t.source != t.target) return {false, t};
    return {};
}

void require_feasible(const Automaton& g, const Automaton& s, const std::string& role) {
    require_same_alphabet(g, s, role);
    if (auto ex = check_control_existence(g, s); !ex.holds)
        throw PreconditionError("infeasible " + role + " '" + s.name() + "': state '" +
                                s.state_name(*ex.state) + "' disables uncontrollable event '" +
                                s.alphabet()[*ex.event].name + "'");
    if (auto fe = check_control_feasibility(s); !fe.holds)
        throw PreconditionError("infeasible " + role + " '" + s.name() +
                                "': unobservable event '" + s.alphabet()[fe.transition->event].name +
                                "' moves from '" + s.state_name(fe.transition->source) + "' to '" +
                                s.state_name(fe.transition->target) + "'");
}

LanguageComparison control_equivalent(const Automaton& g, const Automaton& s1, const Automaton& s2) {
    require_same_alphabet(g, s1, "control equivalence");
    require_same_alphabet(g, s2, "control equivalence");
    return language_equivalent(sync_product(g, s1), sync_product(g, s2));
}

NormalityResult is_normal(const Automaton& g, const Automaton& s, const Automaton& candidate) {
    require_same_alphabet(g, s, "normality check");
    require_same_alphabet(g, candidate, "normality check");
    const std::size_t m = g.num_events();

    std::vector<std::vector<bool>> exercised(candidate.num_states(), std::vector<bool>(m, false));
    std::vector<bool> marked_reached(candidate.num_states(), false);

    using Triple = std::tuple<StateId, StateId, StateId>;
    std::map<Triple, bool> seen;
    std::deque<Triple> queue;
    Triple start{g.initial(), s.initial(), candidate.initial()};
    seen.emplace(start, true);
    queue.push_back(start);
    while (!queue.empty()) {
        auto [x, z, y] = queue.front();
        queue.pop_front();
        if (g.is_marked(x) && s.is_marked(z)) marked_reached[y] = true;
        for (EventId e = 0; e < m; ++e) {
            auto tx = g.next(x, e);
            auto tz = s.next(z, e);
            if (!tx || !tz) continue;
            auto ty = candidate.next(y, e);
            if (!ty) continue;
            exercised[y][e] = true;
            Triple nxt{*tx, *tz, *ty};
            if (seen.emplace(nxt, true).second) queue.push_back(nxt);
        }
    }

    for (const auto& t : candidate.transitions())
        if (!exercised[t.source][t.event]) return {false, t, std::nullopt};
    for (StateId y = 0; y < candidate.num_states(); ++y)
        if (candidate.is_marked(y) && !marked_reached[y]) return {false, std::nullopt, y};
    return {};
}

}  // namespace supred
