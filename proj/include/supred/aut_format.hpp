#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "supred/automaton.hpp"

namespace supred {

// Line-oriented `.aut` text format. `#` starts a comment, tokens are
// whitespace separated, and a file holds one or more blocks:
//
//   automaton <name>
//   events <n>
//   <event> <c|u> <o|n>        (n lines)
//   states <n>
//   <state> ... <state>        (n tokens, any number of lines)
//   initial <state>
//   marked <k> [<state> ...]
//   trans <m>
//   <src> <event> <dst>        (m lines)
//   end

/// Throws ParseError on malformed input (syntax, duplicate or unknown names,
/// empty state set) and NondeterminismError on conflicting transitions.
std::vector<Automaton> parse_automata(std::string_view text);
std::vector<Automaton> parse_automata(std::istream& in);
std::vector<Automaton> load_automata(const std::filesystem::path& path);

/// Canonical form: one event per line, all states on one line, transitions
/// sorted by source state then event id.
std::string serialize_automaton(const Automaton& a);
std::string serialize_automata(const std::vector<Automaton>& automata);
void save_automata(const std::filesystem::path& path, const std::vector<Automaton>& automata);

}  // namespace supred
