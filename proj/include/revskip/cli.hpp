#pragma once

/// @file cli.hpp
/// Command-line surface over the toolkit.  run_cli performs one
/// subcommand and returns the process exit code: 0 on success, 1 on
/// usage or validation errors, 2 when verify or bounds --check finds a
/// genuine mismatch.

#include <ostream>
#include <string>
#include <vector>

namespace revskip {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revskip
