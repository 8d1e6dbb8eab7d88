#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trichrome {

// argv-style entry point shared by main() and the tests (args excludes the
// program name). Exit codes: 0 success, 1 usage, 2 data error, 3 incomplete
// verification.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace trichrome
