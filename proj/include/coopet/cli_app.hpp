#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coopet {

/// Runs the command-line interface against explicit argument and stream
/// bindings so tests can drive it in-process. Returns the process exit code:
/// 0 success/match, 1 validation failure or table mismatch, 2 usage or parse
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coopet
