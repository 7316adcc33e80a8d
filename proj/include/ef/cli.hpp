#pragma once

#include <iosfwd>

namespace ef {

/// Entry point shared by the `forge` binary and the tests.
/// Exit codes: 0 on success (for `verify`: every check passed or was
/// skipped), 1 when at least one verification failed, 2 for usage, parse, or
/// input errors.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace ef
