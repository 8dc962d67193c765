#pragma once

#include <iosfwd>

namespace spencer::cli {

enum ExitCode : int { ok = 0, check_failed = 1, validation_error = 2, internal_error = 3 };

/// Runs the spencer-rr command line. Never throws; errors become exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spencer::cli
