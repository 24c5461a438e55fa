#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reeb_orbit {

// Command line entry point, argv[0] excluded. Exit codes: 0 success,
// 1 failed selftest, 2 a level edge in the input, 3 malformed input or
// usage, 4 anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace reeb_orbit
