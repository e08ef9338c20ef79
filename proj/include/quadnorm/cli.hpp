#pragma once

#include <iosfwd>

namespace quadnorm::cli {

/// Runs one subcommand. Exit codes: 0 success, 2 invalid input (bad radical,
/// wrong residue class, usage errors), 1 internal failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadnorm::cli
