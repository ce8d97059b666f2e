#pragma once

namespace nkicon {

// Exit codes: 0 success, 2 usage, 3 degenerate input, 4 I/O failure.
int run_cli(int argc, const char* const* argv);

}  // namespace nkicon
