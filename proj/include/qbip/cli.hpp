#pragma once

#include <iosfwd>

namespace qbip::cli {

enum ExitCode : int {
    kSuccess = 0,
    kRuntimeError = 1,
    kUsageError = 2,
};

/// Runs the `qbip` command line. Subcommands: noise, slice, reassemble,
/// denoise, compare, metrics, diffmap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbip::cli
