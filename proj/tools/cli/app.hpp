#pragma once

#include <ostream>

namespace vgnet::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitStatistical = 4;

/// Entry point of the `vgnet` tool. Results go to `out` unless --out is
/// given; diagnostics and (without --out) the run manifest go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vgnet::cli
