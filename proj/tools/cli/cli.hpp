#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affblocks::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error
/// (non-dominant input, n <= r, malformed root, ...), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affblocks::cli
