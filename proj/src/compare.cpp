#include "supred/compare.hpp"

#include <deque>
#include <map>

#include "supred/construct.hpp"

namespace supred {

namespace {

constexpr StateId kUnmapped = static_cast<StateId>(-1);

}  // namespace

MorphismResult is_des_epimorphic(const Automaton& a, const Automaton& b) {
    require_same_alphabet(a, b, "DES-morphism check");
    const std::size_t m = a.num_events();
    std::vector<StateId> theta(a.num_states(), kUnmapped);

    // Condition 3 forces theta along every transition of a.
    std::deque<StateId> queue{a.initial()};
    theta[a.initial()] = b.initial();
    while (!queue.empty()) {
        StateId x = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < m; ++e) {
            auto tx = a.next(x, e);
            if (!tx) continue;
            auto ty = b.next(theta[x], e);
            if (!ty) return {};
            if (theta[*tx] == kUnmapped) {
                theta[*tx] = *ty;
                queue.push_back(*tx);
            } else if (theta[*tx] != *ty) {
                return {};
            }
        }
    }
    // Unreachable states of a cannot be mapped consistently by the traversal.
    for (StateId x = 0; x < a.num_states(); ++x)
        if (theta[x] == kUnmapped) return {};

    // Condition 1: surjective.
    std::vector<std::vector<StateId>> preimage(b.num_states());
    for (StateId x = 0; x < a.num_states(); ++x) preimage[theta[x]].push_back(x);
    for (const auto& pre : preimage)
        if (pre.empty()) return {};

    // Condition 2: theta(X_A,m) = X_B,m.
    std::vector<bool> image_marked(b.num_states(), false);
    for (StateId x = 0; x < a.num_states(); ++x)
        if (a.is_marked(x)) image_marked[theta[x]] = true;
    for (StateId y = 0; y < b.num_states(); ++y)
        if (image_marked[y] != b.is_marked(y)) return {};

    // Condition 4: each transition of b is reflected by some preimage state.
    for (StateId y = 0; y < b.num_states(); ++y)
        for (EventId e = 0; e < m; ++e) {
            if (!b.defined(y, e)) continue;
            bool reflected = false;
            for (StateId x : preimage[y])
                if (a.defined(x, e)) {
                    reflected = true;
                    break;
                }
            if (!reflected) return {};
        }

    return {true, std::move(theta)};
}

MorphismResult is_des_isomorphic(const Automaton& a, const Automaton& b) {
    require_same_alphabet(a, b, "DES-isomorphism check");
    if (a.num_states() != b.num_states()) return {};
    // A surjection between equally sized finite sets is a bijection.
    return is_des_epimorphic(a, b);
}

LanguageComparison language_equivalent(const Automaton& a, const Automaton& b) {
    require_same_alphabet(a, b, "language comparison");
    const std::size_t m = a.num_events();

    struct Node {
        StateId x;
        StateId y;
        std::size_t parent;
        EventId via;
    };
    std::vector<Node> nodes;
    std::map<std::pair<StateId, StateId>, std::size_t> seen;

    auto word_of = [&](std::size_t i) {
        Word w;
        while (i != 0) {
            w.push_back(nodes[i].via);
            i = nodes[i].parent;
        }
        return Word(w.rbegin(), w.rend());
    };

    nodes.push_back({a.initial(), b.initial(), 0, 0});
    seen.emplace(std::pair{a.initial(), b.initial()}, 0);

    // Level-synchronous BFS in shortlex order. A marking mismatch at depth d
    // is a witness of length d; an enabling mismatch is one of length d + 1.
    std::size_t level_begin = 0;
    std::optional<Word> pending;  // best enabling witness from the previous level
    while (level_begin < nodes.size()) {
        std::size_t level_end = nodes.size();
        std::optional<Word> best = std::move(pending);
        pending.reset();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            if (a.is_marked(nodes[i].x) != b.is_marked(nodes[i].y)) {
                Word w = word_of(i);
                if (!best || w < *best) best = std::move(w);
                break;  // nodes are visited in shortlex order
            }
        }
        if (best) return {false, std::move(best)};

        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (EventId e = 0; e < m; ++e) {
                auto tx = a.next(nodes[i].x, e);
                auto ty = b.next(nodes[i].y, e);
                if (tx.has_value() != ty.has_value()) {
                    if (!pending) {
                        Word w = word_of(i);
                        w.push_back(e);
                        pending = std::move(w);
                    }
                    continue;
                }
                if (!tx) continue;
                if (seen.emplace(std::pair{*tx, *ty}, nodes.size()).second)
                    nodes.push_back({*tx, *ty, i, e});
            }
        }
        level_begin = level_end;
    }
    if (pending) return {false, std::move(pending)};
    return {true, std::nullopt};
}

}  // namespace supred
