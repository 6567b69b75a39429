#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcl::cli {

enum exit_status : int { ok = 0, failure = 1, incomplete = 2 };

// args excludes the program name
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcl::cli
