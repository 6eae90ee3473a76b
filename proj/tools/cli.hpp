#pragma once

#include <ostream>

namespace liemax::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Stable exit-code contract.
enum Exit : int {
  kOk = 0,            // success / MAXIMAL
  kValidation = 1,    // validation failure
  kParse = 2,         // I/O or parse failure
  kInconclusive = 3,  // certificate INCONCLUSIVE
  kLimit = 4,         // enumeration limit exceeded
};

/// Runs the command line; reports go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace liemax::cli
