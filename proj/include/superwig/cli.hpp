#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sw {

inline constexpr const char* kVersion = "0.3.0";

// Runs one command line (without the program name). Returns the process exit code:
// 0 success, 1 domain error or failed verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sw
