#pragma once

namespace dcl {

// Exit codes: 0 positive result, 1 negative result (obstruction found, not
// degree complete, not realizable), 2 input or usage error, 3 enumeration
// cap exceeded, 4 internal invariant failure.
int run_cli(int argc, const char* const* argv);

}  // namespace dcl
