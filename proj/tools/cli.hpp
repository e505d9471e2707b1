#pragma once

#include <iosfwd>

namespace pgst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default MPFR precision in bits.
inline constexpr const char* kPrecisionEnv = "PGST_PRECISION_BITS";

/// Runs the `pgst` command line. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgst::cli
