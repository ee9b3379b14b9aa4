#pragma once

#include <iosfwd>

namespace ctxsim {

/// Exit codes: 0 success, 1 unexpected failure, 2 invalid input (parse or
/// validation failure, unknown id or context). Command-line usage errors use
/// CLI11's codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ctxsim
