#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubic::cli {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kUsage = 2, kIoError = 3 };

/// Runs one cubictool invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cubic::cli
