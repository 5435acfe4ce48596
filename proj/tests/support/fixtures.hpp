#pragma once

#include <string>

#include "supred/aut_format.hpp"

namespace supred::testing {

inline std::string fixture_path(const std::string& relative) { return std::string(FIXTURE_DIR) + "/" + relative; }

inline Automaton fixture(const std::string& relative) { return load_automata(fixture_path(relative)).front(); }

}  // namespace supred::testing
