#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greedy {

// Full command-line driver; args excludes the program name. Returns the
// process exit code: 0 success, 1 stability bound violated, 2 bad
// configuration, 3 I/O failure, 4 numerical failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace greedy
