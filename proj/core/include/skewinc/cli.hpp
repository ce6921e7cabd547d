#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewinc {

/// Command-line driver behind the skewinc tool. `args` excludes the program
/// name. Results are written to `out`; help, errors, and relabeling notes go
/// to `err`. Returns the process exit code: 0 on success (including negative
/// answers to yes/no queries), 1 on domain errors, 2 on usage and parse
/// errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace skewinc
