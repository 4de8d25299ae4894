#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knot::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kInconclusive = 2;

/// Runs the `knot` command line with args[0] as the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace knot::cli
