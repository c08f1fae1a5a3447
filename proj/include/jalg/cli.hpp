#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jalg {

/// Runs one `jalg` command. Exit codes: 0 success, 1 mathematical failure
/// (axiom violated, not isomorphic, undecided), 2 usage or parse error.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jalg
