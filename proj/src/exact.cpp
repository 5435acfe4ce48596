#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "congruence.hpp"
#include "supred/error.hpp"

namespace supred {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxStates = 64;
constexpr int kUnassigned = -1;

struct Instance {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Mask> compatible;               // compatible[z] has bit z' iff (z,z') in R
    std::vector<std::optional<StateId>> succ;   // z * m + e

    std::optional<StateId> next(StateId z, std::size_t e) const { return succ[z * m + e]; }

    bool clique(Mask cell) const {
        for (Mask rest = cell; rest; rest &= rest - 1)
            if (cell & ~compatible[std::countr_zero(rest)]) return false;
        return true;
    }

    Mask image(Mask cell, std::size_t e) const {
        Mask out = 0;
        for (Mask rest = cell; rest; rest &= rest - 1)
            if (auto t = next(static_cast<StateId>(std::countr_zero(rest)), e)) out |= Mask{1} << *t;
        return out;
    }
};

/// Greedy clique in the incompatibility graph; no cover can do with fewer cells.
std::size_t incompatibility_lower_bound(const Instance& in) {
    std::vector<StateId> order(in.n);
    for (StateId z = 0; z < in.n; ++z) order[z] = z;
    auto conflicts = [&](StateId z) { return in.n - std::popcount(in.compatible[z]); };
    std::stable_sort(order.begin(), order.end(),
                     [&](StateId a, StateId b) { return conflicts(a) > conflicts(b); });
    Mask chosen = 0;
    for (StateId z : order)
        if ((chosen & in.compatible[z]) == 0) chosen |= Mask{1} << z;
    return std::max<std::size_t>(1, std::popcount(chosen));
}

// Restricted-growth assignment of states to at most k disjoint cells.
class PartitionSearch {
public:
    PartitionSearch(const Instance& in, std::size_t k, std::uint64_t& steps)
        : in_(in), k_(k), steps_(steps), cell_(in.n, kUnassigned), members_(k, 0) {}

    std::optional<std::vector<Mask>> run() {
        if (!assign(0, 0)) return std::nullopt;
        std::vector<Mask> out(members_.begin(), members_.begin() + used_);
        return out;
    }

private:
    bool consistent() const {
        std::vector<int> seen(k_);
        for (std::size_t e = 0; e < in_.m; ++e) {
            std::fill(seen.begin(), seen.end(), kUnassigned);
            for (StateId z = 0; z < in_.n; ++z) {
                if (cell_[z] == kUnassigned) continue;
                auto t = in_.next(z, e);
                if (!t || cell_[*t] == kUnassigned) continue;
                int& first = seen[cell_[z]];
                if (first == kUnassigned)
                    first = cell_[*t];
                else if (first != cell_[*t])
                    return false;
            }
        }
        return true;
    }

    bool assign(StateId z, std::size_t used) {
        ++steps_;
        if (z == in_.n) {
            used_ = used;
            return true;
        }
        const std::size_t limit = std::min(used + 1, k_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (members_[c] & ~in_.compatible[z]) continue;
            cell_[z] = static_cast<int>(c);
            members_[c] |= Mask{1} << z;
            if (consistent() && assign(z + 1, std::max(used, c + 1))) return true;
            members_[c] &= ~(Mask{1} << z);
            cell_[z] = kUnassigned;
        }
        return false;
    }

    const Instance& in_;
    std::size_t k_;
    std::uint64_t& steps_;
    std::vector<int> cell_;
    std::vector<Mask> members_;
    std::size_t used_ = 0;
};

// Cells only grow. The first unmet obligation (an image set outside every
// cell, then an uncovered state) is added to an existing cell or opens a new
// one. Any valid k-cover dominates some branch, so the search is complete.
class CoverSearch {
public:
    CoverSearch(const Instance& in, std::size_t k, std::uint64_t& steps) : in_(in), k_(k), steps_(steps) {}

    std::optional<std::vector<Mask>> run() {
        std::vector<Mask> cells;
        if (!search(cells)) return std::nullopt;
        return found_;
    }

private:
    std::optional<Mask> obligation(const std::vector<Mask>& cells) const {
        auto inside = [&](Mask need) {
            return std::any_of(cells.begin(), cells.end(), [&](Mask c) { return (need & ~c) == 0; });
        };
        for (Mask c : cells)
            for (std::size_t e = 0; e < in_.m; ++e) {
                Mask img = in_.image(c, e);
                if (img && !inside(img)) return img;
            }
        Mask covered = 0;
        for (Mask c : cells) covered |= c;
        for (StateId z = 0; z < in_.n; ++z)
            if (!(covered >> z & 1)) return Mask{1} << z;
        return std::nullopt;
    }

    bool search(std::vector<Mask>& cells) {
        ++steps_;
        std::vector<Mask> key = cells;
        std::sort(key.begin(), key.end());
        if (!failed_.insert(key).second) return false;

        auto need = obligation(cells);
        if (!need) {
            found_ = cells;
            return true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            Mask grown = cells[i] | *need;
            if (!in_.clique(grown)) continue;
            Mask before = cells[i];
            cells[i] = grown;
            if (search(cells)) return true;
            cells[i] = before;
        }
        if (cells.size() < k_ && in_.clique(*need)) {
            cells.push_back(*need);
            if (search(cells)) return true;
            cells.pop_back();
        }
        return false;
    }

    const Instance& in_;
    std::size_t k_;
    std::uint64_t& steps_;
    std::set<std::vector<Mask>> failed_;
    std::vector<Mask> found_;
};

Cover to_cover(const std::vector<Mask>& masks) {
    std::vector<std::vector<StateId>> cells;
    for (Mask c : masks) {
        std::vector<StateId> cell;
        for (Mask rest = c; rest; rest &= rest - 1) cell.push_back(static_cast<StateId>(std::countr_zero(rest)));
        cells.push_back(std::move(cell));
    }
    return Cover(std::move(cells));
}

}  // namespace

Reduction reduce_exact_minimum(const Automaton& g, const Automaton& s, CoverMode mode, std::size_t cap) {
    if (s.num_states() > std::min(cap, kMaxStates)) throw CapExceeded(s.num_states(), cap);
    require_feasible(g, s, "supervisor");
    const auto data = control_data(g, s);
    const auto rel = compatibility_relation(data);

    Instance in;
    in.n = s.num_states();
    in.m = s.num_events();
    in.compatible.assign(in.n, 0);
    in.succ.resize(in.n * in.m);
    for (StateId a = 0; a < in.n; ++a) {
        for (StateId b = 0; b < in.n; ++b)
            if (rel(a, b)) in.compatible[a] |= Mask{1} << b;
        for (EventId e = 0; e < in.m; ++e) in.succ[a * in.m + e] = s.next(a, e);
    }

    // The heuristic congruence is a valid cover of both kinds: an upper bound.
    auto upper = detail::control_congruence(s, rel, detail::all_pairs(in.n));
    std::uint64_t steps = upper.steps;
    Cover best = upper.partition;
    for (std::size_t k = incompatibility_lower_bound(in); k < best.size(); ++k) {
        std::optional<std::vector<Mask>> found;
        if (mode == CoverMode::Partition)
            found = PartitionSearch(in, k, steps).run();
        else
            found = CoverSearch(in, k, steps).run();
        if (found) {
            best = to_cover(*found);
            break;
        }
    }

    auto quotient = induce_quotient(s, data, best);
    ReductionReport report{s.num_states(), best.size(), std::move(best), steps,
                           mode == CoverMode::Partition ? ReductionMode::ExactPartition
                                                        : ReductionMode::ExactCover};
    return {std::move(quotient.automaton), std::move(report)};
}

}  // namespace supred
