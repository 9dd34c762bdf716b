#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flk::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command (args excludes the program name) and writes a JSON report
/// to out. Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flk::cli
