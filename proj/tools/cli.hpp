#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetforge::cli {

enum ExitCode { ok = 0, check_failed = 1, usage = 2, invariant = 3 };

/// Runs one command line. Posets are read from `in` (or --input) as JSON and
/// written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace posetforge::cli
