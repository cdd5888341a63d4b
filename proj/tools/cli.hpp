#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcol::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 on
/// success, 1 when a checked statement or golden comparison fails, 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcol::cli
