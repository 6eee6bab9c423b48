#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sperner {

/// Runs one CLI invocation against the given streams. Exit codes:
/// 0 success, 1 certificate failure, 2 invalid input, 3 partial decode
/// errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sperner
