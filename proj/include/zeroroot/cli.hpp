#pragma once

#include <string>
#include <vector>

namespace zeroroot {

// argv-style entry point; args[0] is the program name.
// Returns 0 on success, 1 on a failed check or computation, 2 on a usage error.
int run_cli(const std::vector<std::string>& args);

}  // namespace zeroroot
