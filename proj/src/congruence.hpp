#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "supred/reduction.hpp"

namespace supred::detail {

struct CongruenceResult {
    Cover partition;
    std::uint64_t steps = 0;
};

/// Attempts the given merges in order, each followed by transition closure and
/// rolled back when a class would hold an incompatible pair.
CongruenceResult control_congruence(const Automaton& s, const CompatibilityRelation& rel,
                                    const std::vector<std::pair<StateId, StateId>>& attempts);

std::vector<std::pair<StateId, StateId>> all_pairs(std::size_t n);

}  // namespace supred::detail
