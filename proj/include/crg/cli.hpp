#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crg {

/// Runs the command line `args` (without the program name). Exit status:
/// 0 success, 2 parse error, 3 resource limit, 1 any other error. Errors go
/// to `err` as "error[code]: message".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace crg
