#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qls::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kNumericalError = 3;

// Environment variable naming the default substance file.
inline constexpr const char* kSubstancesEnv = "QLSURF_SUBSTANCES";

// Runs one command line (without the program name). Results go to `out`
// unless --output is given; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qls::cli
