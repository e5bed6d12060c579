#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torsionlab::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitInternal = 3;

// Radians from "30deg", "0.5236rad", "pi/6", "2pi/3" or "2*pi/3"; a bare number has no unit and is rejected
// with DomainError.
double parse_angle(const std::string& text);

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torsionlab::cli
