#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace weyl {

inline constexpr const char* kToolVersion = "0.1.0";

struct CommandRequest {
  std::string name;
  std::vector<std::string> args;
  std::optional<std::string> dir;  // "R,S"
  bool square = false;
  std::optional<std::int64_t> prec;
  std::int64_t bound = 32;
  int max_iters = 64;
  std::int64_t max_k = 0;
  std::uint64_t seed = 0;
  std::int64_t cases = 200;
};

struct CommandResult {
  nlohmann::ordered_json document;  // {command, inputs, result, witnesses, meta}
  std::string text;                 // plain output, newline-terminated
  bool failed = false;              // selftest with a failing suite
};

/// Dispatches one command. Throws PreconditionError (unknown command, bad
/// arguments, parse errors) and InvariantError from the operations.
CommandResult run_command(const CommandRequest& request);

/// The weylscreen front end. Returns the process exit code: 0 success,
/// 1 precondition or parse error, 2 invariant breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments given as one shell-style line (no program name).
int run_cli_line(const std::string& line, std::ostream& out, std::ostream& err);

/// Runs a golden file: "$ <args>" lines followed by the expected output.
/// Lines starting with '#' are comments. Reports mismatches on err and
/// returns the number of failing entries.
int run_golden(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace weyl
