#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zi::cli {

enum class OutputFormat { Plain, Json, Csv };

struct CliConfig {
  OutputFormat format = OutputFormat::Plain;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // e.g. not prime, no solutions, not Diophantine
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zi::cli
