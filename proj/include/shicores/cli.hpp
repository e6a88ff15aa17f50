#pragma once

#include <iosfwd>

namespace shicores {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitParseError = 2,
    kExitLimits = 3,
    kExitIo = 4,
};

// Entry point of the `shicores` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace shicores
