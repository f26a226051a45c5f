#pragma once

#include <iosfwd>

namespace motzhank {

enum ExitCode { exit_ok = 0, exit_refuted = 1, exit_usage = 2, exit_environment = 3 };

/// Command-line entry point; writes normal output to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

} // namespace motzhank
