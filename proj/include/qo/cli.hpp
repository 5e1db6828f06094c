#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs the `qo` command line. `args` excludes the program name. Errors go to
/// `err` prefixed with "error[usage]: " or "error[domain]: ".
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qo
