#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace amicus {

/// The command-line front end; returns the process exit code (0 ok,
/// 1 domain/usage error, 2 broken internal invariant).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace amicus
