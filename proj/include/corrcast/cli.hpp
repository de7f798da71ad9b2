#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace corrcast::cli {

enum ExitCode : int { ok = 0, fail = 1, boundary = 2, usage = 64, data = 65 };

/// Parses argv and dispatches to one subcommand; documents go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corrcast::cli
