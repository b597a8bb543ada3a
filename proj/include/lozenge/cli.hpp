#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lozenge {

// Runs the command-line interface on the given arguments (program name
// excluded). Exit codes: 0 success, 1 verification failure, 2 bad input,
// 3 resource guard exceeded, 4 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lozenge
