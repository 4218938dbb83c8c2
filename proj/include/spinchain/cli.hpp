#pragma once

#include <string>
#include <vector>

namespace spinchain::cli {

// Runs one subcommand (args exclude the program name) and writes its output
// files. Returns 0 on success, 1 on numerical failure, 2 on usage errors.
int run(std::vector<std::string> args);

}  // namespace spinchain::cli
