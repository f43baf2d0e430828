#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emograd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitConfigError = 2;

// Entry point of the `emograd` tool. Reports go to `out`, log lines and
// errors to `err`. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emograd::cli
