#include "supred/construct.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "supred/error.hpp"

namespace supred {

std::vector<std::string> make_unique_names(std::vector<std::string> names) {
    std::unordered_set<std::string> used(names.begin(), names.end());
    std::unordered_set<std::string> seen;
    for (auto& n : names) {
        if (seen.insert(n).second) continue;
        for (std::size_t k = 1;; ++k) {
            std::string candidate = n + "~" + std::to_string(k);
            if (!used.count(candidate)) {
                n = candidate;
                used.insert(n);
                seen.insert(n);
                break;
            }
        }
    }
    return names;
}

ProductResult sync_product_detailed(const Automaton& a, const Automaton& b) {
    require_same_alphabet(a, b, "synchronous product");
    const std::size_t m = a.num_events();

    std::map<std::pair<StateId, StateId>, StateId> index;
    std::vector<std::pair<StateId, StateId>> pairs;
    std::vector<Transition> edges;
    std::deque<StateId> queue;

    auto intern = [&](std::pair<StateId, StateId> p) {
        auto [it, fresh] = index.emplace(p, static_cast<StateId>(pairs.size()));
        if (fresh) {
            pairs.push_back(p);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern({a.initial(), b.initial()});
    while (!queue.empty()) {
        StateId cur = queue.front();
        queue.pop_front();
        auto [x, y] = pairs[cur];
        for (EventId e = 0; e < m; ++e) {
            auto tx = a.next(x, e);
            auto ty = b.next(y, e);
            if (tx && ty) edges.push_back({cur, e, intern({*tx, *ty})});
        }
    }

    std::vector<std::string> names;
    names.reserve(pairs.size());
    for (auto [x, y] : pairs) names.push_back("(" + a.state_name(x) + "," + b.state_name(y) + ")");
    names = make_unique_names(std::move(names));

    Automaton out(a.alphabet(), a.name() + "||" + b.name());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out.add_state(names[i], a.is_marked(pairs[i].first) && b.is_marked(pairs[i].second));
    for (const auto& t : edges) out.add_transition(t.source, t.event, t.target);
    return {std::move(out), std::move(pairs)};
}

Automaton sync_product(const Automaton& a, const Automaton& b) {
    return sync_product_detailed(a, b).automaton;
}

namespace {

std::vector<bool> reachable_set(const Automaton& a) {
    std::vector<bool> seen(a.num_states(), false);
    if (a.num_states() == 0) return seen;
    std::vector<StateId> stack{a.initial()};
    seen[a.initial()] = true;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (EventId e = 0; e < a.num_events(); ++e)
            if (auto t = a.next(s, e); t && !seen[*t]) {
                seen[*t] = true;
                stack.push_back(*t);
            }
    }
    return seen;
}

}  // namespace

bool is_reachable(const Automaton& a) {
    auto seen = reachable_set(a);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Automaton trim_reachable(const Automaton& a) {
    auto seen = reachable_set(a);
    std::vector<StateId> remap(a.num_states(), 0);
    Automaton out(a.alphabet(), a.name());
    for (StateId s = 0; s < a.num_states(); ++s)
        if (seen[s]) remap[s] = out.add_state(a.state_name(s), a.is_marked(s));
    out.set_initial(remap[a.initial()]);
    for (const auto& t : a.transitions())
        if (seen[t.source]) out.add_transition(remap[t.source], t.event, remap[t.target]);
    return out;
}

Word project(const Word& word, const Alphabet& alphabet) {
    Word out;
    for (EventId e : word) {
        if (e >= alphabet.size())
            throw PreconditionError("event id " + std::to_string(e) + " is not in the alphabet");
        if (alphabet.observable(e)) out.push_back(e);
    }
    return out;
}

namespace {

std::vector<StateId> unobservable_closure(const Automaton& a, std::vector<StateId> seed) {
    const Alphabet& sigma = a.alphabet();
    std::vector<bool> in(a.num_states(), false);
    std::vector<StateId> stack;
    for (StateId s : seed)
        if (!in[s]) {
            in[s] = true;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (EventId e = 0; e < sigma.size(); ++e) {
            if (sigma.observable(e)) continue;
            if (auto t = a.next(s, e); t && !in[*t]) {
                in[*t] = true;
                stack.push_back(*t);
            }
        }
    }
    std::vector<StateId> out;
    for (StateId s = 0; s < a.num_states(); ++s)
        if (in[s]) out.push_back(s);
    return out;
}

}  // namespace

SubsetResult subset_construction_detailed(const Automaton& a) {
    const Alphabet& sigma = a.alphabet();
    std::map<std::vector<StateId>, StateId> index;
    std::vector<std::vector<StateId>> members;
    std::vector<Transition> edges;
    std::deque<StateId> queue;

    auto intern = [&](std::vector<StateId> set) {
        auto [it, fresh] = index.emplace(set, static_cast<StateId>(members.size()));
        if (fresh) {
            members.push_back(std::move(set));
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(unobservable_closure(a, {a.initial()}));
    while (!queue.empty()) {
        StateId cur = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < sigma.size(); ++e) {
            if (!sigma.observable(e)) {
                bool any = std::any_of(members[cur].begin(), members[cur].end(),
                                       [&](StateId x) { return a.defined(x, e); });
                if (any) edges.push_back({cur, e, cur});
                continue;
            }
            std::vector<StateId> targets;
            for (StateId x : members[cur])
                if (auto t = a.next(x, e)) targets.push_back(*t);
            if (targets.empty()) continue;
            StateId dst = intern(unobservable_closure(a, std::move(targets)));
            edges.push_back({cur, e, dst});
        }
    }

    std::vector<std::string> names;
    for (const auto& set : members) {
        std::vector<std::string> parts;
        for (StateId x : set) parts.push_back(a.state_name(x));
        std::sort(parts.begin(), parts.end());
        std::string name;
        for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? "+" : "") + parts[i];
        names.push_back(std::move(name));
    }
    names = make_unique_names(std::move(names));

    Automaton out(sigma, "subset(" + a.name() + ")");
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool marked = std::any_of(members[i].begin(), members[i].end(),
                                  [&](StateId x) { return a.is_marked(x); });
        out.add_state(names[i], marked);
    }
    for (const auto& t : edges) out.add_transition(t.source, t.event, t.target);
    return {std::move(out), std::move(members)};
}

Automaton subset_construction(const Automaton& a) { return subset_construction_detailed(a).automaton; }

Automaton with_alphabet(const Automaton& a, const Alphabet& alphabet) {
    bool same_names = alphabet.size() == a.num_events();
    for (EventId e = 0; same_names && e < alphabet.size(); ++e)
        same_names = alphabet[e].name == a.alphabet()[e].name;
    if (!same_names) throw PreconditionError("'" + a.name() + "' uses different event names");
    Automaton out(alphabet, a.name());
    for (StateId x = 0; x < a.num_states(); ++x) out.add_state(a.state_name(x), a.is_marked(x));
    out.set_initial(a.initial());
    for (const auto& t : a.transitions()) out.add_transition(t.source, t.event, t.target);
    return out;
}

}  // namespace supred
