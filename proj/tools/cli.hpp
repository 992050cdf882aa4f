#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummer::cli {

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success, 2 validation or domain error (JSON on `err`),
/// 1 unexpected failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kummer::cli
