#include <algorithm>
#include <sstream>

#include "supred/error.hpp"
#include "supred/reduction.hpp"

namespace supred {

Cover::Cover(std::vector<std::vector<StateId>> cells) : cells_(std::move(cells)) {
    for (auto& cell : cells_) {
        if (cell.empty()) throw PreconditionError("a cover cell must be nonempty");
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    }
    std::stable_sort(cells_.begin(), cells_.end());
}

Cover Cover::singletons(std::size_t num_states) {
    std::vector<std::vector<StateId>> cells;
    for (StateId z = 0; z < num_states; ++z) cells.push_back({z});
    return Cover(std::move(cells));
}

Cover Cover::parse(std::string_view text, const Automaton& s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    std::vector<std::vector<StateId>> cells;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view cell_text = trim(text.substr(start, end - start));
        std::vector<StateId> cell;
        std::size_t pos = 0;
        while (pos <= cell_text.size() && !cell_text.empty()) {
            std::size_t comma = cell_text.find(',', pos);
            if (comma == std::string_view::npos) comma = cell_text.size();
            std::string_view name = trim(cell_text.substr(pos, comma - pos));
            auto z = s.find_state(name);
            if (!z) throw PreconditionError("cover names unknown state '" + std::string(name) + "'");
            cell.push_back(*z);
            pos = comma + 1;
        }
        if (cell.empty()) throw PreconditionError("a cover cell must be nonempty");
        cells.push_back(std::move(cell));
        start = end + 1;
    }
    return Cover(std::move(cells));
}

bool Cover::contains(std::size_t cell, StateId z) const {
    return std::binary_search(cells_[cell].begin(), cells_[cell].end(), z);
}

bool Cover::is_partition() const {
    std::vector<StateId> all;
    for (const auto& c : cells_) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::string Cover::format(const Automaton& s) const {
    std::string out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i > 0) out += ' ';
        out += '{';
        for (std::size_t k = 0; k < cells_[i].size(); ++k) {
            if (k > 0) out += ',';
            out += s.state_name(cells_[i][k]);
        }
        out += '}';
    }
    return out;
}

namespace {

void require_well_formed(const Automaton& s, const ControlData& data, const Cover& cover) {
    if (data.size() != s.num_states())
        throw PreconditionError("control data does not match supervisor '" + s.name() + "'");
    std::vector<bool> covered(s.num_states(), false);
    for (const auto& cell : cover.cells())
        for (StateId z : cell) {
            if (z >= s.num_states())
                throw PreconditionError("cover names state " + std::to_string(z) +
                                        " outside supervisor '" + s.name() + "'");
            covered[z] = true;
        }
    for (StateId z = 0; z < s.num_states(); ++z)
        if (!covered[z])
            throw PreconditionError("cover leaves state '" + s.state_name(z) + "' uncovered");
}

/// Successors of a cell under one event, sorted and deduplicated.
std::vector<StateId> cell_successors(const Automaton& s, const std::vector<StateId>& cell, EventId e) {
    std::vector<StateId> out;
    for (StateId z : cell)
        if (auto t = s.next(z, e)) out.push_back(*t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool includes_all(const std::vector<StateId>& cell, const std::vector<StateId>& sub) {
    return std::includes(cell.begin(), cell.end(), sub.begin(), sub.end());
}

}  // namespace

CoverCheck validate_cover(const Automaton& s, const ControlData& data, const Cover& cover) {
    require_well_formed(s, data, cover);
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const auto& cell = cover[i];
        for (std::size_t a = 0; a < cell.size(); ++a)
            for (std::size_t b = a + 1; b < cell.size(); ++b)
                if (!compatible(data, cell[a], cell[b])) {
                    CoverCheck r;
                    r.valid = false;
                    r.cell = i;
                    r.incompatible = std::pair{cell[a], cell[b]};
                    r.violation = "cell " + std::to_string(i) + " holds incompatible states '" +
                                  s.state_name(cell[a]) + "' and '" + s.state_name(cell[b]) + "'";
                    return r;
                }
    }
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (EventId e = 0; e < s.num_events(); ++e) {
            auto succ = cell_successors(s, cover[i], e);
            if (succ.empty()) continue;
            bool fits = false;
            for (const auto& cell : cover.cells())
                if (includes_all(cell, succ)) {
                    fits = true;
                    break;
                }
            if (!fits) {
                CoverCheck r;
                r.valid = false;
                r.cell = i;
                r.event = e;
                r.violation = "successors of cell " + std::to_string(i) + " under '" +
                              s.alphabet()[e].name + "' do not fit in a single cell";
                return r;
            }
        }
    return {};
}

namespace {

Quotient build_quotient(const Automaton& s, const ControlData& data, const Cover& cover,
                        const QuotientChoice* preferred) {
    if (auto check = validate_cover(s, data, cover); !check.valid)
        throw PreconditionError("invalid control cover: " + check.violation);

    const std::size_t m = s.num_events();
    const std::size_t k = cover.size();
    QuotientChoice choice;
    choice.num_events = m;
    choice.target.assign(k * m, std::nullopt);
    choice.alternatives.assign(k * m, false);

    if (preferred) {
        if (preferred->initial_cell >= k || !cover.contains(preferred->initial_cell, s.initial()))
            throw PreconditionError("preferred initial cell does not hold the initial state");
        choice.initial_cell = preferred->initial_cell;
    } else {
        std::size_t i = 0;
        while (!cover.contains(i, s.initial())) ++i;
        choice.initial_cell = i;
    }

    for (std::size_t i = 0; i < k; ++i)
        for (EventId e = 0; e < m; ++e) {
            auto succ = cell_successors(s, cover[i], e);
            if (succ.empty()) continue;
            std::vector<std::size_t> valid;
            for (std::size_t j = 0; j < k; ++j)
                if (includes_all(cover[j], succ)) valid.push_back(j);
            std::size_t pick = valid.front();
            if (preferred && preferred->at(i, e)) {
                std::size_t want = *preferred->at(i, e);
                if (std::find(valid.begin(), valid.end(), want) == valid.end())
                    throw PreconditionError("preferred target cell " + std::to_string(want) +
                                            " does not qualify for cell " + std::to_string(i) +
                                            " under '" + s.alphabet()[e].name + "'");
                pick = want;
            } else if (!s.alphabet().observable(e) &&
                       std::find(valid.begin(), valid.end(), i) != valid.end()) {
                pick = i;
            }
            choice.target[i * m + e] = pick;
            choice.alternatives[i * m + e] = valid.size() > 1;
        }

    std::vector<std::string> names;
    for (const auto& cell : cover.cells()) {
        std::string name = "{";
        for (std::size_t idx = 0; idx < cell.size(); ++idx)
            name += (idx ? "," : "") + s.state_name(cell[idx]);
        names.push_back(name + "}");
    }
    names = make_unique_names(std::move(names));

    Automaton out(s.alphabet(), "quotient(" + s.name() + ")");
    for (std::size_t i = 0; i < k; ++i) {
        // Cells the marked plant behavior reaches follow M, which compatibility
        // keeps consistent; the others keep the plain "meets Zm" rule.
        const auto& cell = cover[i];
        bool g_marked = std::any_of(cell.begin(), cell.end(), [&](StateId z) { return data[z].marked_g; });
        bool marked = g_marked ? std::any_of(cell.begin(), cell.end(), [&](StateId z) { return data[z].marked_s; })
                               : std::any_of(cell.begin(), cell.end(), [&](StateId z) { return s.is_marked(z); });
        out.add_state(names[i], marked);
    }
    out.set_initial(static_cast<StateId>(choice.initial_cell));
    for (std::size_t i = 0; i < k; ++i)
        for (EventId e = 0; e < m; ++e)
            if (auto j = choice.target[i * m + e])
                out.add_transition(static_cast<StateId>(i), e, static_cast<StateId>(*j));
    return {std::move(out), std::move(choice)};
}

}  // namespace

Quotient induce_quotient(const Automaton& s, const ControlData& data, const Cover& cover) {
    return build_quotient(s, data, cover, nullptr);
}

Quotient induce_quotient(const Automaton& s, const ControlData& data, const Cover& cover,
                         const QuotientChoice& preferred) {
    return build_quotient(s, data, cover, &preferred);
}

std::string to_string(ReductionMode mode) {
    switch (mode) {
        case ReductionMode::Heuristic: return "heuristic";
        case ReductionMode::ExactPartition: return "exact-partition";
        case ReductionMode::ExactCover: return "exact-cover";
        case ReductionMode::Random: return "random";
    }
    return "unknown";
}

}  // namespace supred
