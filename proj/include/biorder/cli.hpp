/*
    cli.hpp

    Command-line front end.  run() parses an argument vector, executes one
    subcommand (or a batch file), writes the report to `out`, and returns the
    process exit code: 0 affirmative/success, 1 negative verdict, 2 invalid
    input, 3 depth exceeded.
*/
#ifndef BIORDER_CLI_HPP
#define BIORDER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace biorder::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitDepthExceeded = 3;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace biorder::cli

#endif
