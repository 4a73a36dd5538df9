#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgi {

// Full command-line surface; args exclude the program name. Returns the
// process exit code: 0 success/isomorphic, 1 not isomorphic, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgi
