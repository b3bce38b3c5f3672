#pragma once

#include <iosfwd>

namespace facering {

/// Exit codes: 0 success, 1 input or usage error, 2 route disagreement or failed identity.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace facering
