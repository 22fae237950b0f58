#pragma once

#include <iosfwd>

namespace graphtherm {

/// Entry point behind the graphtherm binary. Exit codes: 0 success,
/// 1 I/O failure, 2 validation or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace graphtherm
