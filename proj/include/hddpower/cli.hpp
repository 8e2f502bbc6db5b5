#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hddpower/model_core.hpp"

namespace hddpower::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // bad flags or flag values
inline constexpr int kExitInvalid = 3;     // data, validation, I/O or calibration errors
inline constexpr int kExitTolerance = 4;   // `verify` found a check out of tolerance

/// Parses "n=1,rpm=15098,d=2.6" plus optional gb=, watts=, id=.
DiskSpec parse_spec(const std::string& text);

/// "empirical", "theoretical", or overrides such as "rpm=3,d=5,n=1" on top
/// of the empirical set.
PowerModel parse_exponents(const std::string& text);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hddpower::cli
