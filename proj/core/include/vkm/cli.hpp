#pragma once

#include <string>
#include <vector>

namespace vkm {

/// Entry point behind the command line binary, callable in-process by tests.
/// args are the words after the program name. Returns the process exit code:
/// zero for every completed decision (sat, unsat and unknown alike), nonzero
/// for usage and input errors.
int run_cli(const std::vector<std::string>& args);

} // namespace vkm
