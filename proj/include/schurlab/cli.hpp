#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurlab {

/// Runs the command line (args excludes the program name). Exit status:
/// 0 success or all checks passed, 1 a verification failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurlab
