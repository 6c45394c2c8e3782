#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gapcert::cli {

/// Process exit codes.
enum Exit : int {
  ok = 0,
  usage = 1,
  refuted = 2,
  precision_cap = 3,
  enumeration_cap = 4,
};

/// Runs one command line (without the program name). Primary output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapcert::cli
