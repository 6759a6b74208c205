#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egcf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kCheckFailed = 2;

// Runs one subcommand. `args` excludes the program name. CSV goes to the
// --out file (written via temp file + rename) or, without --out, to `out`
// ahead of the summary line, which is prefixed with "# ".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egcf::cli
