#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locgame {

/// Runs the command-line interface. Exit codes: 0 success, 1 check failed,
/// 2 usage error, 3 computational budget exhausted.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace locgame
