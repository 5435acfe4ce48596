#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supred::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kFalse = 1, kUsage = 2, kPrecondition = 3, kCap = 4 };

struct CommandResult {
    std::string command;
    std::optional<bool> verdict;  ///< empty when the command produces an artifact
    std::map<std::string, std::size_t> sizes;
    std::optional<std::string> witness;
    std::optional<std::string> output_file;
    int exit_code = kSuccess;
};

/// `{"command","verdict","sizes","witness","output_file"}`.
std::string to_json(const CommandResult& result);

/// Runs one command line (without the program name). Human-readable output or
/// JSON (with `--json`) goes to `out`, diagnostics to `err`.
CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supred::cli
