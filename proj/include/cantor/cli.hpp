#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // selftest or validation disagreement
inline constexpr int kParseError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kUndecided = 4;  // Inconclusive, PeriodNotFound, NeedsMorePrecision

// args[0] is the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
