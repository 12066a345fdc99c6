#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modlift::cli {

// Exit codes.
inline constexpr int kOk = 0;        // lift / all checks pass
inline constexpr int kNegative = 1;  // no lift / mismatch
inline constexpr int kInvalid = 2;
inline constexpr int kIo = 3;
inline constexpr int kCap = 4;

// Runs the modlift command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modlift::cli
