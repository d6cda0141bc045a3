#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coslab::cli {

/// Exit statuses of the `coslab` command.
enum Exit : int {
  ok = 0,
  identity_failure = 1,
  parse_error = 2,
  excluded_parameter = 3,
  representation_mismatch = 4,
  rejected_body = 5,
};

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a flat key=value config file into command-line flags: `key=value`
/// becomes `--key value`, `key=true` becomes `--key`. Blank lines and lines
/// starting with '#' are ignored. Throws ParseError on malformed lines.
std::vector<std::string> config_flags(const std::string& path);

}  // namespace coslab::cli
