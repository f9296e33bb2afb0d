#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualrect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Table, Json, Csv };

/// Runs the command line `args` (without the program name). Results go to
/// `out`; diagnostics, errors and help text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dualrect::cli
