#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssb {

/// The `ssb` command line, minus the program name. Returns the exit code:
/// 0 success, 1 computation error (or failed audit / suite), 2 usage or
/// parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssb
