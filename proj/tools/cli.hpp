#pragma once

#include <iosfwd>

namespace roughdxl::cli {

/// Batch mode when at least one --query is given, REPL otherwise.
/// Returns 0 on success, 1 on a load or parse error, 2 on a query error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive = false);

}  // namespace roughdxl::cli
