#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vvmf::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command line (without the program name). Results go to `out` or --out, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vvmf::cli
