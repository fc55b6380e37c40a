#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace daqb::cli {

enum class Format { Text, Json };

/// Settings shared by every subcommand. Precedence: command-line flag,
/// then --config file, then environment (DAQB_N, DAQB_BUDGET, ...).
struct RunConfig {
  int n = 3;
  std::string family = "D";
  long budget = 100'000;
  int depth = 20;
  std::uint64_t seed = 20'240'601;
  double tolerance = 1e-6;
  int samples = 16'384;
  Format format = Format::Text;

  /// Throws std::invalid_argument.
  void validate() const;
};

enum ExitCode : int {
  Ok = 0,
  Failed = 1,      // verify failure, eq Distinct
  BadInput = 2,    // usage, parse or domain error
  OutOfBudget = 3,
  Undecided = 4,   // eq Unknown
};

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace daqb::cli
