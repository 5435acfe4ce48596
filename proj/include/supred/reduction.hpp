#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supred/automaton.hpp"
#include "supred/construct.hpp"
#include "supred/supervision.hpp"

namespace supred {

/// Indexed family of nonempty state sets. Members are kept sorted and cells
/// are kept in canonical order (by sorted member list, lexicographically).
/// Repeated cells are allowed.
class Cover {
public:
    Cover() = default;
    /// Throws PreconditionError on an empty cell.
    explicit Cover(std::vector<std::vector<StateId>> cells);

    static Cover singletons(std::size_t num_states);
    /// Parses `z0,z1;z2` (cells separated by `;`, members by `,`) against the
    /// state names of `s`.
    static Cover parse(std::string_view text, const Automaton& s);

    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<std::vector<StateId>>& cells() const noexcept { return cells_; }
    const std::vector<StateId>& operator[](std::size_t i) const { return cells_[i]; }
    bool contains(std::size_t cell, StateId z) const;
    bool is_partition() const;

    std::string format(const Automaton& s) const;

    friend bool operator==(const Cover&, const Cover&) = default;

private:
    std::vector<std::vector<StateId>> cells_;
};

struct CoverCheck {
    bool valid = true;
    std::string violation;
    std::optional<std::size_t> cell;
    std::optional<std::pair<StateId, StateId>> incompatible;
    std::optional<EventId> event;
};

/// Checks that every cell is pairwise compatible and that, for every cell and
/// event, the successors of the cell fit inside a single cell. Throws
/// PreconditionError if the cover is malformed for `s` (unknown state, or a
/// state left uncovered).
CoverCheck validate_cover(const Automaton& s, const ControlData& data, const Cover& cover);

/// The cell-level transition map picked while building a quotient.
struct QuotientChoice {
    std::size_t num_events = 0;
    std::size_t initial_cell = 0;
    std::vector<std::optional<std::size_t>> target;  ///< cell * num_events + event
    std::vector<bool> alternatives;                  ///< more than one valid target existed

    std::optional<std::size_t> at(std::size_t cell, EventId e) const {
        return target[cell * num_events + e];
    }
};

struct Quotient {
    Automaton automaton;
    QuotientChoice choice;
};

/// Builds the supervisor induced by a valid cover. The initial cell is the
/// first cell holding the initial state. For each cell and event the target is
/// the cell itself when it qualifies and the event is unobservable, otherwise
/// the lowest-index qualifying cell. A cell holding a state with T(z) is
/// marked iff one of its states has M(z); any other cell is marked iff it
/// holds a marked state.
/// Throws PreconditionError if the cover is invalid.
Quotient induce_quotient(const Automaton& s, const ControlData& data, const Cover& cover);

/// As above, but prefers the given initial cell and targets wherever they
/// qualify. Throws PreconditionError if a preferred choice does not qualify.
Quotient induce_quotient(const Automaton& s, const ControlData& data, const Cover& cover,
                         const QuotientChoice& preferred);

struct SuperConstruction {
    Automaton loop;       ///< reachable g||s
    SubsetResult subsets; ///< subset construction of the loop
};

/// Subset construction of g||s. Throws PreconditionError if `s` is infeasible.
SuperConstruction build_super_detailed(const Automaton& g, const Automaton& s);
Automaton build_super(const Automaton& g, const Automaton& s);

/// Enabled and disabled sets of a SUPER state computed from its member
/// closed-loop states. `super` must be build_super(g, s).
std::pair<EventSet, EventSet> characterize_super_state(const Automaton& g, const Automaton& s,
                                                       const Automaton& super, StateId z);

struct ExtractedCover {
    Cover cover;
    std::vector<std::size_t> cell_of;  ///< cell index for each state of SIMSUP
    QuotientChoice choice;             ///< transition map mirroring SIMSUP
};

/// One cell per state y of `simsup`: the SUPER states reached together with y
/// by strings of L(G||S). Throws PreconditionError naming the failed
/// precondition (feasibility, control equivalence, normality).
ExtractedCover extract_cover_from_simsup(const Automaton& super, const Automaton& simsup,
                                         const Automaton& g, const Automaton& s);

enum class ReductionMode { Heuristic, ExactPartition, ExactCover, Random };
enum class CoverMode { Partition, Cover };

std::string to_string(ReductionMode mode);

struct ReductionReport {
    std::size_t input_size = 0;
    std::size_t output_size = 0;
    Cover cover;
    std::uint64_t steps = 0;
    ReductionMode mode = ReductionMode::Heuristic;
};

struct Reduction {
    Automaton supervisor;
    ReductionReport report;
};

/// Control congruence by pairwise merge attempts with closure and rollback.
/// Throws PreconditionError if `s` is infeasible.
Reduction reduce_heuristic(const Automaton& g, const Automaton& s);

inline constexpr std::size_t kDefaultExactCap = 10;

/// Minimum valid partition or cover by iterative deepening on the cell count.
/// Throws CapExceeded if `s` has more than `cap` states (cap at most 64) and
/// PreconditionError if `s` is infeasible.
Reduction reduce_exact_minimum(const Automaton& g, const Automaton& s, CoverMode mode,
                               std::size_t cap = kDefaultExactCap);

/// Random control congruence on build_super(g, s), deterministic per seed.
Reduction random_reduction(const Automaton& g, const Automaton& s, std::uint64_t seed);
Automaton generate_equivalent_supervisor(const Automaton& g, const Automaton& s, std::uint64_t seed);

}  // namespace supred
