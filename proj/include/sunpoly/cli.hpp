#pragma once

// Command-line front end: `verify` runs a suite, `compute` prints one value.

#include <iosfwd>
#include <string>
#include <vector>

namespace sunpoly {

/// args excludes the program name. Returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sunpoly
