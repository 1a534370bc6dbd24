#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissoc::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 iff no input errors and no violations.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace dissoc::cli
