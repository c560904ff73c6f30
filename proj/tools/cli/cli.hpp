#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spectra_forge::cli {

inline constexpr const char* kSchema = "spectra-forge/1";

inline constexpr int kExitVerdict = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectra_forge::cli
