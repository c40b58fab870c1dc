#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srgraph {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Runs one srgtool command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srgraph
