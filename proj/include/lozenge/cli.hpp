#pragma once

#include <cstddef>
#include <iosfwd>

namespace lozenge {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kInvalidRegion = 3,
  kInvalidShuffle = 4,
  kBadArgument = 5,
};

/// Regions with at most this many unit triangles are cross-checked against
/// the oracle by default.
inline constexpr std::size_t kOracleCellBudget = 60;

/// Entry point of the `lozenge` tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lozenge
