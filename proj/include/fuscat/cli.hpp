#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuscat {

// Full command-line surface; returns the process exit code. Reports are
// deterministic byte-for-byte for fixed arguments (no timestamps unless
// --timing is given).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuscat
