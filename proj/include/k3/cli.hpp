#pragma once

// Command-line front end: parses a command, dispatches to the library and
// writes one JSON document to `out`.
//
// Exit codes: 0 success, 1 failed acceptance suite, 2 invalid input,
// 3 inconclusive (a bounded search ran out).

#include <iosfwd>
#include <string>
#include <vector>

namespace k3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInconclusive = 3;

/// `args` excludes the program name. Diagnostics and timings go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3::cli
