#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace sprk::cli {

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`; returns the process exit code.
///
/// Exit codes: 0 success / gate passed, 1 gate failed, 2 usage or input
/// error, 3 integrator non-convergence.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Parses a `key = value` file; '#' starts a comment. Throws on I/O errors or
/// lines without '='.
std::map<std::string, std::string> load_config(const std::string& path);

/// Parses "a,b,c" into doubles.
std::vector<double> parse_list(const std::string& text);

}  // namespace sprk::cli
