#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anyonwalk::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kCapExceeded = 3,
  kSelfcheckFailed = 4,
};

/// Runs the command line (args excludes the program name). Data goes to
/// `out` unless --output names a file; messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyonwalk::cli
