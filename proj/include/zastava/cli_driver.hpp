#pragma once

// The zastava binary is a thin wrapper around run_cli, so tests can drive the
// whole command surface in-process with injected streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace zastava {

// args excludes the program name; returns the process exit code:
// 0 success, 1 identity failure, 2 input/domain error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace zastava
