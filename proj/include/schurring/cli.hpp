#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schurring/io.hpp"

namespace schurring {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands: verify-schur-ring, check-condition, structure-constants,
/// schurian-test, invariant-slopes, cross-validate, census.
const std::vector<std::string>& command_names();

struct RunConfig {
  std::string command;
  std::optional<std::string> field;
  std::optional<std::string> partition_path;
  std::uint32_t oracle_cap = kDefaultOracleCap;
  std::uint64_t gl_cap = kDefaultGlCap;
  std::size_t census_cap = kDefaultCensusCap;
  unsigned workers = 0;
  /// Defaults per command: TSV for tables, JSON otherwise.
  std::optional<Format> format;
  std::optional<std::string> output;
  Scope scope = Scope::all;
};

/// Dispatches one subcommand.  Report bytes go to `out` (or the configured
/// output file), diagnostics to `err`.  Returns 0 on success, 1 when a
/// verification fails, 2 on usage, parse or sizing errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace schurring
