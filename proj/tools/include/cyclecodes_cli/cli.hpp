#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclecodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "delta,rate,curve" rows with 12 significant digits.
std::string format_csv_row(double delta, double rate, const std::string& curve);

}  // namespace cyclecodes::cli
